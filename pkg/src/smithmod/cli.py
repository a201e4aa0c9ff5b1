"""smithmod command line: analyze, series, lattice, matrices, identify.

Instances are JSON files.  Exactly one algebra source is given, either
``g`` or ``u`` (coefficient lists, low degree first) or ``roots`` plus
``leading``; ``C`` is optional.  Rank-one commands read ``X`` (and an
optional ``twist``); rank-n commands read ``p``, ``lambda``, ``Xsub``
and ``dual``, either at top level or inside a ``rank_n`` object.

Exit codes: 0 success, 1 failed verification, 2 invalid input,
3 polynomial does not split over Q, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import oracle, rankn
from .errors import ConsistencyError, InvalidInput, NotSplit, SmithModError
from .exactpoly import Poly
from .rankone import (RankOneModule, act, composition_series_all, ell_of, factored,
                      is_simple, k0_decompose, lattice_to_dot, length,
                      minimal_elements, submodule_lattice)
from .rational import as_rational, format_rational
from .rootorder import RootMultiset
from .smith import CentralCharacterData, SmithAlgebra

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_SPLIT, EXIT_ORACLE = 0, 1, 2, 3, 4


@dataclass
class Instance:
    central: CentralCharacterData
    raw: dict

    def rank_one(self) -> RankOneModule:
        X = RootMultiset.from_json(self.raw.get("X", []))
        return RankOneModule(self.central, X, as_rational(self.raw.get("twist", 1)))

    def exp_module(self) -> rankn.ExpModule:
        stanza = self.raw.get("rank_n", self.raw)
        if "p" not in stanza or "lambda" not in stanza:
            raise InvalidInput("rank-n instance needs 'p' and 'lambda'")
        Xsub = stanza.get("Xsub", stanza.get("X", []))
        dual = stanza.get("dual", False)
        if not isinstance(dual, bool):
            raise InvalidInput("'dual' must be a boolean")
        return rankn.ExpModule(self.central, Poly.from_json(stanza["p"]),
                               as_rational(stanza["lambda"]), RootMultiset.from_json(Xsub), dual)


def load_instance(data) -> Instance:
    if not isinstance(data, dict):
        raise InvalidInput("instance must be a JSON object")
    algebra = data.get("algebra", data)
    sources = [k for k in ("g", "u", "roots") if k in algebra]
    if len(sources) != 1:
        raise InvalidInput(f"need exactly one of g, u, roots; found {sources or 'none'}")
    C = as_rational(algebra.get("C", data.get("C", 0)))
    if "roots" in algebra:
        central = CentralCharacterData.from_roots(
            RootMultiset.from_json(algebra["roots"]), as_rational(algebra.get("leading", 1)), C)
    elif "g" in algebra:
        central = SmithAlgebra.from_g(Poly.from_json(algebra["g"])).central_data(C)
    else:
        central = SmithAlgebra(Poly.from_json(algebra["u"])).central_data(C)
    return Instance(central, data)


def _rat_map(d: dict) -> dict:
    return {format_rational(k): v for k, v in d.items()}


def cmd_analyze(inst: Instance, args) -> tuple[dict, int]:
    m = inst.rank_one()
    k0 = k0_decompose(m)
    minimal = minimal_elements(m)
    report = {
        "C": format_rational(m.C),
        "R": m.R.to_json(),
        "X": m.X.to_json(),
        "twist": format_rational(m.twist),
        "simple": is_simple(m),
        "socle": k0.socle_X.to_json(),
        "length": length(m),
        "ell": ell_of(m),
        "phi": _rat_map(k0.multiplicities),
        "minimal": [{"gamma": format_rational(e.gamma), "beta": format_rational(e.beta),
                     "t": e.t.to_json(), "dim": e.quotient_dim} for e in minimal],
    }
    code = EXIT_OK
    if args.oracle:
        ok = {e.t for e in minimal} == set(oracle.brute_minimal(m))
        series = composition_series_all(m, args.cap)
        if series.series:
            factors = series.series[0].factors()
            by_beta = {b: 0 for b in m.R.underlying()}
            for (beta, _), k in factors.items():
                by_beta[beta] += k
            ok = ok and by_beta == k0.multiplicities and series.series[0].socle_X == k0.socle_X
        report["oracle"] = "verified" if ok else "mismatch"
        code = EXIT_OK if ok else EXIT_ORACLE
    return report, code


def cmd_series(inst: Instance, args) -> tuple[dict, int]:
    m = inst.rank_one()
    result = composition_series_all(m, args.cap)
    report = {
        "count": len(result.series),
        "truncated": result.truncated,
        "series": [{
            "betas": [format_rational(b) for b in s.betas],
            "steps": [{"beta": format_rational(st.beta), "t": st.t.to_json(),
                       "t_factored": factored(st.t), "dim": st.quotient_dim,
                       "stage": st.stage_X.to_json()} for st in s.steps],
            "socle": s.socle_X.to_json(),
        } for s in result.series],
        "length": length(m),
    }
    code = EXIT_OK
    if args.oracle:
        ok = all(oracle.validate_series(m, s) for s in result.series)
        report["oracle"] = "verified" if ok else "mismatch"
        code = EXIT_OK if ok else EXIT_ORACLE
    return report, code


def cmd_lattice(inst: Instance, args) -> tuple[str | dict, int]:
    m = inst.rank_one()
    lat = submodule_lattice(m)
    dot = lattice_to_dot(lat)
    code = EXIT_OK
    stamp = None
    if args.oracle:
        ok = {n.t for n in lat.nodes if not n.is_zero} == set(oracle.brute_lattice(m))
        stamp = "verified" if ok else "mismatch"
        code = EXIT_OK if ok else EXIT_ORACLE
        dot = f"// oracle: {stamp}\n" + dot
    if args.dot:
        Path(args.dot).write_text(dot)
        report = {"nodes": len(lat.nodes), "covers": len(lat.covers), "dot": args.dot}
        if stamp:
            report["oracle"] = stamp
        return report, code
    return dot, code


def cmd_matrices(inst: Instance, args) -> tuple[dict, int]:
    m = inst.exp_module()
    if m.dual:
        P, Q = rankn.action_matrices(m)
        closed = None
    else:
        P, Q = rankn.exp_matrices(m)
        closed = (P, Q) == rankn.action_matrices(m)
    if args.inject_fault:
        rows = [list(r) for r in P.rows]
        rows[0][0] = rows[0][0] + 1
        P = rankn.PolyMatrix.of(rows)
    rel = rankn.verify_relations(P, Q, m.g)
    cen = rankn.verify_central(P, Q, m.u, m.C)
    report = {
        "n": m.n,
        "dual": m.dual,
        "P": P.to_json(),
        "Q": Q.to_json(),
        "verified_relations": rel,
        "verified_central": cen,
        "verified": rel and cen,
    }
    if closed is not None:
        report["closed_form_matches_action"] = closed
    if m.Xsub == m.central.R.with_removed(m.lam):
        report["simplicity"] = "simple" if rankn.exp_simple_sufficient(m) else "unknown"
    return report, EXIT_OK if rel and cen else EXIT_VERIFY


def cmd_identify(inst: Instance, args) -> tuple[dict, int]:
    m = inst.exp_module()
    C, X, xi = rankn.identify_rank_one(m)
    report = {"C": format_rational(C), "X": X.to_json(), "xi": format_rational(xi)}
    code = EXIT_OK
    if args.oracle:
        target = rankn.identified_module(m)
        ok = True
        for word in ("x", "y", "h", "xy", "yx", "xxy"):
            for f in (Poly((1,)), Poly((0, 1)), Poly((2, -1, 1))):
                image = rankn.weyl_act(m, word, rankn.embed(m, [f]))
                ok = ok and rankn.reduce_element(m, image) == [act(target, word, f)]
        report["oracle"] = "verified" if ok else "mismatch"
        code = EXIT_OK if ok else EXIT_ORACLE
    return report, code


COMMANDS = {
    "analyze": cmd_analyze,
    "series": cmd_series,
    "lattice": cmd_lattice,
    "matrices": cmd_matrices,
    "identify": cmd_identify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="smithmod",
                                 description="Modules over Smith algebras free over k[h].")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("instance", help="path to an instance JSON file ('-' for stdin)")
    ap.add_argument("--oracle", action="store_true",
                    help="cross-check results against brute-force enumeration")
    ap.add_argument("--cap", type=int, default=1000, help="maximum number of series to list")
    ap.add_argument("--dot", help="write the lattice DOT to this path")
    ap.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cap < 1:
        print("error: --cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        text = sys.stdin.read() if args.instance == "-" else Path(args.instance).read_text()
        data = json.loads(text)
        if isinstance(data, dict) and data.get("options"):
            opts = data["options"]
            args.oracle = args.oracle or bool(opts.get("oracle", False))
            if "cap" in opts and args.cap == 1000:
                args.cap = int(opts["cap"])
        inst = load_instance(data)
        out, code = COMMANDS[args.command](inst, args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except NotSplit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPLIT
    except (OSError, json.JSONDecodeError, InvalidInput, SmithModError,
            KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        print(json.dumps(out, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
