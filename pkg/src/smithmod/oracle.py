"""Brute-force verifiers for the rank-one machinery.

Nothing here calls the fast path in :mod:`smithmod.rankone`.  Membership
in the divisibility lattice is decided by exact polynomial division of
t(h-1)p(h) and t(h+1)q(h) by t(h); candidates are enumerated over a finite
grid of roots.

Enumeration assigns a multiplicity m(a) to every grid point, walking each
integer run left to right.  Because p and q split over Q, t | t(h-1)p(h)
holds exactly when m(a) <= m(a-1) + mult_p(a) at every a, and t | t(h+1)q(h)
when m(a) <= m(a+1) + mult_q(a); these necessary conditions prune partial
assignments, and every surviving candidate is re-checked by division.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product

from .errors import GridTooSmall, NotDivisible
from .exactpoly import ONE, Poly, multiplicity, poly_divexact, poly_from_roots, rational_roots
from .rankone import CompositionSeries, RankOneModule
from .rational import Fraction
from .rootorder import RootMultiset, coset_key, star
from .smith import simple_dim


@dataclass(frozen=True)
class GridSpec:
    """Candidate roots y + 1 + j for y in ``base_roots`` and 0 <= j <= ``span``."""

    base_roots: RootMultiset
    span: int
    max_degree: int
    max_multiplicity: int

    @property
    def roots(self) -> tuple[Fraction, ...]:
        return tuple(sorted({y + 1 + j for y in self.base_roots.underlying()
                             for j in range(self.span + 1)}))


def _divides(t: Poly, f: Poly) -> bool:
    try:
        poly_divexact(f, t)
    except NotDivisible:
        return False
    return True


def is_member(m: RankOneModule, t: Poly) -> bool:
    """Raw definition: t | t(h-1) p(h) and t | t(h+1) q(h)."""
    return _divides(t, t.shift(-1) * m.p) and _divides(t, t.shift(1) * m.q)


def default_grid(m: RankOneModule, span: int | None = None) -> GridSpec:
    """Roots y + 1 + j for y in Y and 0 <= j <= span.

    The default span is the largest max(X) - min(Y) over integer cosets.
    Multiplicities are capped at min(|X|, |Y|): m(a) can never exceed the
    number of roots of p at or left of a, nor of q at or right of a.
    """
    X, Y = m.X, m.Y
    if span is None:
        span = 0
        for key in {coset_key(v) for v in m.R.underlying()}:
            xs = [v for v in X.underlying() if coset_key(v) == key]
            ys = [v for v in Y.underlying() if coset_key(v) == key]
            if xs and ys:
                span = max(span, int(max(xs) - min(ys)))
    max_mult = max(min(len(X), len(Y)), 1)
    npoints = len({y + j for y in Y.underlying() for j in range(span + 1)})
    return GridSpec(Y, span, npoints * max_mult, max_mult)


def _check_coverage(m: RankOneModule, grid: GridSpec):
    have = set(grid.roots)
    for key in {coset_key(v) for v in m.R.underlying()}:
        xs = [v for v in m.X.underlying() if coset_key(v) == key]
        ys = [v for v in m.Y.underlying() if coset_key(v) == key]
        if not xs or not ys:
            continue
        lo, hi = min(ys) + 1, max(xs)
        a = lo
        while a <= hi:
            if a not in have:
                warnings.warn(GridTooSmall(f"grid misses {a}"), stacklevel=3)
                return
            a += 1


def _runs(roots) -> list[list[Fraction]]:
    """Split grid points into maximal runs of consecutive integers-apart values."""
    runs: list[list[Fraction]] = []
    for r in sorted(roots, key=lambda v: (coset_key(v), v)):
        if runs and r - runs[-1][-1] == 1:
            runs[-1].append(r)
        else:
            runs.append([r])
    return runs


def _from_multiplicities(assign: dict) -> Poly:
    return poly_from_roots(RootMultiset.from_counts(assign))


def brute_lattice(m: RankOneModule, grid: GridSpec | None = None) -> list[Poly]:
    """All nonzero lattice elements with roots on the grid, sorted by degree then roots."""
    if grid is None:
        grid = default_grid(m)
    _check_coverage(m, grid)
    p, q = m.p, m.q
    points = set(grid.roots)
    mp = {a: multiplicity(p, a) for a in points}
    mq = {a: multiplicity(q, a) for a in points}
    runs = _runs(points)

    def run_solutions(run):
        sols = []

        def walk(i, prev, acc, deg):
            if i == len(run):
                # right neighbour is off the grid, so m = 0 there
                if prev <= mq[run[-1]]:
                    sols.append((dict(acc), deg))
                return
            a = run[i]
            for k in range(grid.max_multiplicity + 1):
                if deg + k > grid.max_degree:
                    break
                if k > prev + mp[a]:
                    break
                if i and prev > k + mq[run[i - 1]]:
                    continue
                if k:
                    acc[a] = k
                walk(i + 1, k, acc, deg + k)
                acc.pop(a, None)

        walk(0, 0, {}, 0)
        return sols

    per_run = [run_solutions(run) for run in runs]
    found = []
    for combo in product(*per_run):
        deg = sum(d for _, d in combo)
        if deg > grid.max_degree:
            continue
        assign = {}
        for part, _ in combo:
            assign.update(part)
        t = _from_multiplicities(assign)
        if is_member(m, t):
            found.append((deg, tuple(RootMultiset.from_counts(assign)), t))
    found.sort(key=lambda e: (e[0], e[1]))
    return [t for _, _, t in found]


def naive_lattice(m: RankOneModule, grid: GridSpec) -> list[Poly]:
    """Unpruned enumeration of every multiplicity vector on the grid (small grids only)."""
    found = []
    pts = list(grid.roots)
    for mults in product(range(grid.max_multiplicity + 1), repeat=len(pts)):
        if sum(mults) > grid.max_degree:
            continue
        t = _from_multiplicities(dict(zip(pts, mults)))
        if is_member(m, t):
            found.append(t)
    found.sort(key=lambda t: (t.degree, tuple(rational_roots(t)[0])))
    return found


def brute_minimal(m: RankOneModule, grid: GridSpec | None = None) -> list[Poly]:
    """Members other than 1 with no proper nontrivial divisor in the lattice."""
    members = [t for t in brute_lattice(m, grid) if t != ONE]
    out = []
    for t in members:
        if not any(s != t and _divides(s, t) for s in members):
            out.append(t)
    return out


def _ceil_root(x: Fraction, k: int) -> int:
    """Least integer r >= 0 with r**k >= x."""
    lo, hi = 0, 1
    while hi ** k < x:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _root_bound(f: Poly) -> int:
    """Fujiwara bound: every root has |z| <= 2 max_k |a_(n-k)/a_n|^(1/k)."""
    n = int(f.degree)
    lead = f.leading
    r = max((_ceil_root(abs(f[n - k] / lead), k) for k in range(1, n + 1)), default=0)
    return 2 * r


def brute_simple_dim(u: Poly, lam, bound: int | None = None) -> int | None:
    """Direct search for the least j >= 1 with u(lam) = u(lam - j)."""
    if bound is None:
        bound = _root_bound(u(lam) - u.compose(Poly((lam, -1))))
    target = u(lam)
    for j in range(1, bound + 1):
        if u(lam - j) == target:
            return j
    return None


def validate_series(m: RankOneModule, series: CompositionSeries, grid_of=default_grid) -> bool:
    """Re-derive each step of a composition series from the definitions."""
    stage = m
    for step in series.steps:
        if step.t not in brute_minimal(stage, grid_of(stage)):
            return False
        try:
            q_next = poly_divexact(step.t.shift(1) * stage.q, step.t)
        except NotDivisible:
            return False
        roots, rest = rational_roots(q_next)
        if rest != ONE or roots != step.stage_X:
            return False
        if simple_dim(stage.u, step.beta) != step.quotient_dim:
            return False
        if brute_simple_dim(stage.u, step.beta) != step.quotient_dim:
            return False
        if step.beta not in stage.X or max(rational_roots(step.t)[0]) != step.beta:
            return False
        if star(stage.R, stage.X, step.beta) != step.stage_X:
            return False
        stage = stage.with_X(step.stage_X)
    if stage.X != series.socle_X:
        return False
    return brute_minimal(stage, grid_of(stage)) == []
