"""Rank-one modules A_C(X, xi): free of rank one over k[h].

The module is k[h] with

    x . f = f(h+1) * xi * q(h),      y . f = f(h-1) * p(h) / xi,

where q = Poly_X is monic, p = (u(h-1) + C) / q(h-1) and xi is the twist
parameter (the leading coefficient of x . 1).  Submodules are the ideals
t k[h] with t in the divisibility lattice; the maximal ones come from
gapless integer chains running from just above a root of Y = R - X up to a
root of X, with no root of R strictly inside.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (CapExceeded, ConsistencyError, NotMonic, NotSplit,
                     NotSubmultiset, RelationViolated, ZeroTwist)
from .exactpoly import ONE, ZERO, H, Poly, poly_divexact, poly_from_roots, rational_roots
from .rational import Fraction, as_rational, format_rational
from .rootorder import RootMultiset, ell, phi, precedes, star
from .smith import CentralCharacterData, central_character, g_from_u, simple_dim

DEFAULT_SERIES_CAP = 10_000
DEFAULT_LATTICE_CAP = 10_000


@dataclass(frozen=True)
class RankOneModule:
    central: CentralCharacterData
    X: RootMultiset
    twist: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "twist", as_rational(self.twist))
        if self.twist == 0:
            raise ZeroTwist("twist parameter must be nonzero")
        if not self.X <= self.central.R:
            raise NotSubmultiset(f"X = {self.X} is not a submultiset of R = {self.central.R}")

    @property
    def R(self) -> RootMultiset:
        return self.central.R

    @property
    def C(self) -> Fraction:
        return self.central.C

    @property
    def leading(self) -> Fraction:
        return self.central.leading

    @cached_property
    def Y(self) -> RootMultiset:
        return self.R - self.X

    @cached_property
    def u(self) -> Poly:
        return self.central.u

    @cached_property
    def g(self) -> Poly:
        return g_from_u(self.u)

    @cached_property
    def q(self) -> Poly:
        return poly_from_roots(self.X)

    @cached_property
    def p(self) -> Poly:
        return poly_divexact(self.u.shift(-1) + self.C, self.q.shift(-1))

    def with_X(self, X: RootMultiset) -> "RankOneModule":
        return RankOneModule(self.central, X, self.twist)

    def to_json(self) -> dict:
        out = self.central.to_json()
        out["X"] = self.X.to_json()
        if self.twist != 1:
            out["twist"] = format_rational(self.twist)
        return out


@dataclass(frozen=True)
class MinimalElement:
    gamma: Fraction
    beta: Fraction
    t: Poly
    quotient_dim: int


@dataclass(frozen=True)
class CompositionStep:
    beta: Fraction
    t: Poly
    quotient_dim: int
    stage_X: RootMultiset


@dataclass(frozen=True)
class CompositionSeries:
    steps: tuple[CompositionStep, ...]
    socle_X: RootMultiset

    @property
    def betas(self) -> tuple[Fraction, ...]:
        return tuple(s.beta for s in self.steps)

    def factors(self) -> Counter:
        return Counter((s.beta, s.quotient_dim) for s in self.steps)


@dataclass
class SeriesEnumeration:
    series: list[CompositionSeries]
    truncated: bool = False


@dataclass(frozen=True)
class K0Decomposition:
    socle_X: RootMultiset
    multiplicities: dict

    @property
    def length(self) -> int:
        return 1 + sum(self.multiplicities.values())


@dataclass(frozen=True)
class LatticeNode:
    t: Poly
    X: RootMultiset | None  # None marks the zero submodule

    @property
    def is_zero(self) -> bool:
        return self.X is None


@dataclass
class SubmoduleLattice:
    nodes: list[LatticeNode]
    covers: list[tuple[int, int]] = field(default_factory=list)  # (bigger, smaller)

    def index(self, t: Poly) -> int:
        for i, node in enumerate(self.nodes):
            if node.t == t:
                return i
        raise KeyError(t)


def build(R, xi, C, X, twist=1) -> RankOneModule:
    """A_C(X) for u + C = xi * Poly_R; ``twist`` is the leading coefficient of x.1."""
    if not isinstance(R, RootMultiset):
        R = RootMultiset(R)
    if not isinstance(X, RootMultiset):
        X = RootMultiset(X)
    m = RankOneModule(CentralCharacterData.from_roots(R, xi, C), X, twist)
    if m.q * m.p.shift(1) != m.u + m.C:
        raise RelationViolated("q(h) p(h+1) != u(h) + C")
    return m


def act(m: RankOneModule, word: str, f: Poly) -> Poly:
    """Apply a word in x, y, h, z to ``f``; the rightmost letter acts first."""
    for letter in reversed(word):
        if letter == "x":
            f = f.shift(1) * m.q * m.twist
        elif letter == "y":
            f = f.shift(-1) * m.p * (1 / m.twist)
        elif letter == "h":
            f = H * f
        elif letter == "z":
            f = f * m.C
        else:
            raise ValueError(f"unknown generator {letter!r}")
    return f


def is_simple(m: RankOneModule) -> bool:
    return not any(precedes(a, b, strict=True)
                   for a in m.Y.underlying() for b in m.X.underlying())


def lattice_member(m: RankOneModule, t: Poly) -> bool:
    if t.is_zero():
        return True
    if not t.is_monic():
        raise NotMonic(f"{t} is not monic")
    return t.divides(t.shift(-1) * m.p) and t.divides(t.shift(1) * m.q)


def chain_poly(gamma, beta) -> Poly:
    """(h - (gamma+1)) (h - (gamma+2)) ... (h - beta)."""
    gamma = as_rational(gamma)
    out = ONE
    for j in range(1, int(as_rational(beta) - gamma) + 1):
        out = out * Poly.linear_root(gamma + j)
    return out


def minimal_elements(m: RankOneModule) -> list[MinimalElement]:
    roots = set(m.X.underlying()) | set(m.Y.underlying())
    found = []
    for beta in m.X.underlying():
        for gamma in m.Y.underlying():
            if not precedes(gamma, beta, strict=True):
                continue
            if any(precedes(gamma, v, strict=True) and precedes(v, beta, strict=True)
                   for v in roots):
                continue
            found.append(MinimalElement(gamma, beta, chain_poly(gamma, beta), int(beta - gamma)))
    found.sort(key=lambda e: (e.beta, e.gamma))
    return found


def maximal_submodules(m: RankOneModule) -> list[tuple[MinimalElement, RankOneModule]]:
    out = []
    for me in minimal_elements(m):
        expected = simple_dim(m.u, me.beta)
        if expected != me.quotient_dim:
            raise ConsistencyError(
                f"quotient L({format_rational(me.beta)}) has dimension {me.quotient_dim}, "
                f"but u predicts {expected}")
        out.append((me, m.with_X(star(m.R, m.X, me.beta))))
    return out


def socle(m: RankOneModule) -> RootMultiset:
    X = m.X
    while True:
        minimal = minimal_elements(m.with_X(X))
        if not minimal:
            return X
        X = star(m.R, X, minimal[0].beta)


def composition_series_all(m: RankOneModule, cap: int = DEFAULT_SERIES_CAP) -> SeriesEnumeration:
    """Every composition series, found depth first over the maximal submodules.

    Stops after ``cap`` series and sets ``truncated`` if more exist.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    result = SeriesEnumeration([])

    def walk(stage: RankOneModule, steps: list):
        if result.truncated:
            return
        children = maximal_submodules(stage)
        if not children:
            if len(result.series) >= cap:
                result.truncated = True
            else:
                result.series.append(CompositionSeries(tuple(steps), stage.X))
            return
        for me, child in children:
            steps.append(CompositionStep(me.beta, me.t, me.quotient_dim, child.X))
            walk(child, steps)
            steps.pop()

    walk(m, [])
    lengths = {len(s.steps) for s in result.series}
    factor_sets = {frozenset(s.factors().items()) for s in result.series}
    socles = {s.socle_X for s in result.series}
    if len(lengths) > 1 or len(factor_sets) > 1 or len(socles) > 1:
        raise ConsistencyError("composition series disagree (Jordan-Hoelder violated)")
    return result


def k0_decompose(m: RankOneModule) -> K0Decomposition:
    mults = {beta: phi(m.R, m.X, beta) for beta in m.R.underlying()}
    return K0Decomposition(socle(m), mults)


def length(m: RankOneModule) -> int:
    return 1 + sum(phi(m.R, m.X, beta) for beta in m.R.underlying())


def ell_of(m: RankOneModule) -> int:
    return ell(m.R, m.X)


def _node_key(node: LatticeNode):
    if node.is_zero:
        return (1, 0, ())
    return (0, node.t.degree, tuple(rational_roots(node.t)[0]))


def submodule_lattice(m: RankOneModule, cap: int = DEFAULT_LATTICE_CAP) -> SubmoduleLattice:
    """All submodules t k[h], closed under taking maximal submodules from the top."""
    stages = {ONE: m.X}
    covers = set()
    queue = deque([ONE])
    while queue:
        t = queue.popleft()
        stage = m.with_X(stages[t])
        children = maximal_submodules(stage)
        if not children:
            covers.add((t, ZERO))
        for me, child in children:
            tt = t * me.t
            covers.add((t, tt))
            if tt not in stages:
                if len(stages) >= cap:
                    raise CapExceeded(f"submodule lattice exceeds {cap} nodes")
                stages[tt] = child.X
                queue.append(tt)
    nodes = [LatticeNode(t, X) for t, X in stages.items()] + [LatticeNode(ZERO, None)]
    nodes.sort(key=_node_key)
    where = {node.t: i for i, node in enumerate(nodes)}
    edges = sorted((where[a], where[b]) for a, b in covers)
    return SubmoduleLattice(nodes, edges)


def canonical_form(p: Poly, q: Poly, u: Poly) -> tuple[Fraction, RootMultiset, Fraction]:
    """(C, X, xi) with the module y.1 = p, x.1 = q isomorphic to F_xi A_C(X)."""
    if q.is_zero():
        raise NotSplit("q must be nonzero")
    C = central_character(p, q, u)
    X, cofactor = rational_roots(q)
    if cofactor != ONE:
        raise NotSplit(f"x.1 = {q} does not split over Q")
    if q.shift(-1) * p - p.shift(1) * q != g_from_u(u):
        raise RelationViolated("q(h-1)p(h) - p(h+1)q(h) != g(h)")
    return C, X, q.leading


def twist(m: RankOneModule, lam) -> RankOneModule:
    lam = as_rational(lam)
    if lam == 0:
        raise ZeroTwist("twist by zero is undefined")
    return RankOneModule(m.central, m.X, m.twist * lam)


def factored(t: Poly, var: str = "h") -> str:
    """Human-readable factorisation of a split monic polynomial."""
    if t.is_zero():
        return "0"
    roots, rest = rational_roots(t)
    parts = []
    for r, k in roots.items():
        if r == 0:
            base = var
        elif r > 0:
            base = f"({var}-{format_rational(r)})"
        else:
            base = f"({var}+{format_rational(-r)})"
        parts.append(base if k == 1 else f"{base}^{k}")
    if rest != ONE:
        parts.append(f"({rest.format(var)})")
    lead = "" if t.leading == 1 else format_rational(t.leading) + "*"
    return lead + ("".join(parts) or "1")


def lattice_to_dot(lat: SubmoduleLattice, name: str = "submodules") -> str:
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=ellipse];"]
    for i, node in enumerate(lat.nodes):
        label = factored(node.t)
        attrs = [f'label="{label}"']
        if node.is_zero:
            attrs += ["shape=box", 'style="filled"', 'fillcolor="lightgray"']
        else:
            attrs.append(f'tooltip="X = {node.X}"')
            if not any(a == i and lat.nodes[b].is_zero is False for a, b in lat.covers):
                attrs += ['style="filled"', 'fillcolor="lightblue"']
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for a, b in lat.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
