"""Exponential modules: S_u acting on k[t] e^p through differential operators.

With theta = t d/dt + lambda + 1, the generators act as

    h -> theta,   x -> Q_X(theta) d/dt,   y -> P_X(theta) t,

and on the dual module (Weyl-algebra automorphism t -> d/dt, d/dt -> -t)
as

    h -> -(d/dt) t + lambda + 1,   x -> -Q_X(h) t,   y -> P_X(h) d/dt.

Elements c(t) e^p are stored by their coefficient c; d/dt acts on them
by c -> c' + c p'.  For deg p = n >= 1 the module is free over k[h] on
e^p, t e^p, ..., t^(n-1) e^p, and action matrices are written in that
basis with rows holding the coordinates of x.v_i (resp. y.v_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (DualUnsupported, InvalidInput, SizeMismatch,
                     WrongDegree, WrongX)
from .exactpoly import ONE, H, Poly, poly_from_roots
from .rankone import RankOneModule
from .rational import Fraction, as_rational, format_rational
from .rootorder import RootMultiset, precedes
from .smith import CentralCharacterData, g_from_u

T = Poly.var()  # the Weyl-side variable t


@dataclass(frozen=True)
class ExpModule:
    central: CentralCharacterData
    p_weyl: Poly
    lam: Fraction
    Xsub: RootMultiset
    dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))
        R = self.central.R
        if self.lam not in R:
            raise InvalidInput(f"lambda = {format_rational(self.lam)} is not a root of u + C")
        if not self.Xsub <= R.with_removed(self.lam):
            raise InvalidInput(f"X = {self.Xsub} is not a submultiset of R - {{lambda}}")

    @property
    def n(self) -> int:
        return int(self.p_weyl.degree) if self.p_weyl.degree >= 1 else 0

    @property
    def C(self) -> Fraction:
        return self.central.C

    @cached_property
    def u(self) -> Poly:
        return self.central.u

    @cached_property
    def g(self) -> Poly:
        return g_from_u(self.u)

    @cached_property
    def Q_X(self) -> Poly:
        return poly_from_roots(self.Xsub)

    @cached_property
    def P_X(self) -> Poly:
        rest = self.central.R.with_removed(self.lam) - self.Xsub
        return poly_from_roots(rest, self.central.leading).shift(-1)

    @cached_property
    def dp(self) -> Poly:
        return self.p_weyl.derivative()

    def to_json(self) -> dict:
        out = self.central.to_json()
        out.update({"p": self.p_weyl.to_json(), "lambda": format_rational(self.lam),
                    "Xsub": self.Xsub.to_json(), "dual": self.dual})
        return out


@dataclass(frozen=True)
class WeylElement:
    """coeff(t) e^p."""

    coeff: Poly

    def __add__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.coeff + other.coeff)

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.coeff - other.coeff)

    def scale(self, c) -> "WeylElement":
        return WeylElement(self.coeff * c)


@dataclass(frozen=True)
class PolyMatrix:
    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise SizeMismatch("matrix must be square and nonempty")

    @classmethod
    def of(cls, rows) -> "PolyMatrix":
        return cls(tuple(tuple(e if isinstance(e, Poly) else Poly.constant(e) for e in r)
                         for r in rows))

    @classmethod
    def scalar(cls, n: int, f: Poly) -> "PolyMatrix":
        return cls.of([[f if i == j else Poly() for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def shift(self, s) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(e.shift(s) for e in r) for r in self.rows))

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise SizeMismatch(f"{self.n}x{self.n} times {other.n}x{other.n}")
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Poly()
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(tuple(out))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise SizeMismatch(f"{self.n} vs {other.n}")
        return PolyMatrix(tuple(tuple(a - b for a, b in zip(r, s))
                                for r, s in zip(self.rows, other.rows)))

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(fn(e) for e in r) for r in self.rows))

    def to_json(self) -> list:
        return [[e.to_json() for e in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "PolyMatrix":
        return cls.of([[Poly.from_json(e) for e in r] for r in data])


# -- differential-operator action ---------------------------------------------

def _d(m: ExpModule, c: Poly) -> Poly:
    return c.derivative() + c * m.dp


def _theta(m: ExpModule, c: Poly) -> Poly:
    shift = m.lam + 1
    if m.dual:
        return -_d(m, T * c) + c * shift
    return T * _d(m, c) + c * shift


def _poly_in_theta(m: ExpModule, f: Poly, c: Poly) -> Poly:
    acc = Poly()
    for a in reversed(f.coeffs):
        acc = _theta(m, acc) + c * a
    return acc


def weyl_act(m: ExpModule, word: str, v: WeylElement) -> WeylElement:
    """Apply a word in x, y, h, z to ``v``; the rightmost letter acts first."""
    c = v.coeff
    for gen in reversed(word):
        if gen == "h":
            c = _theta(m, c)
        elif gen == "x":
            if m.dual:
                c = -_poly_in_theta(m, m.Q_X, T * c)
            else:
                c = _poly_in_theta(m, m.Q_X, _d(m, c))
        elif gen == "y":
            if m.dual:
                c = _poly_in_theta(m, m.P_X, _d(m, c))
            else:
                c = _poly_in_theta(m, m.P_X, T * c)
        elif gen == "z":
            xy = weyl_act(m, "xy", WeylElement(c)).coeff
            c = xy - _poly_in_theta(m, m.u, c)
        else:
            raise ValueError(f"unknown generator {gen!r}")
    return WeylElement(c)


# -- k[h]-basis ------------------------------------------------------------------

def _require_rank(m: ExpModule) -> int:
    if m.n < 1:
        raise WrongDegree("the exponent polynomial must have degree at least 1")
    return m.n


def _power_coordinates(m: ExpModule, top: int) -> list[list[Poly]]:
    """Coordinates of t^s e^p for s = 0..top in the basis t^i e^p, i < n.

    Uses h . t^s e^p = (lambda + 1 + s) t^s e^p + t^(s+1) p' e^p (non-dual),
    resp. (lambda - s) t^s e^p - t^(s+1) p' e^p (dual), solved for the
    highest power t^(s+n), whose coefficient is n * alpha_n.
    """
    n = _require_rank(m)
    alpha = m.p_weyl.coeffs
    lead_inv = 1 / (n * alpha[n])
    coords = []
    for s in range(top + 1):
        if s < n:
            coords.append([ONE if i == s else Poly() for i in range(n)])
            continue
        b = s - n
        if m.dual:
            mult = Poly((m.lam - b, -1))
        else:
            mult = H - (m.lam + 1 + b)
        acc = [mult * c for c in coords[b]]
        for j in range(1, n):
            if alpha[j]:
                acc = [a - c * (j * alpha[j]) for a, c in zip(acc, coords[b + j])]
        coords.append([a * lead_inv for a in acc])
    return coords


def khbasis_reduce(m: ExpModule, s: int) -> list[Poly]:
    """Coordinates (polynomials in h) of t^s e^p in the basis e^p, ..., t^(n-1) e^p."""
    if s < 0:
        raise ValueError("s must be non-negative")
    return _power_coordinates(m, s)[s]


def reduce_element(m: ExpModule, v: WeylElement) -> list[Poly]:
    n = _require_rank(m)
    if v.coeff.is_zero():
        return [Poly() for _ in range(n)]
    coords = _power_coordinates(m, int(v.coeff.degree))
    out = [Poly() for _ in range(n)]
    for s, a in enumerate(v.coeff.coeffs):
        if a:
            out = [o + c * a for o, c in zip(out, coords[s])]
    return out


def embed(m: ExpModule, coords: list[Poly]) -> WeylElement:
    """Inverse of ``reduce_element``: sum_i c_i(h) . t^i e^p."""
    n = _require_rank(m)
    if len(coords) != n:
        raise SizeMismatch(f"expected {n} coordinates, got {len(coords)}")
    total = Poly()
    for i, c in enumerate(coords):
        total = total + _poly_in_theta(m, c, Poly.monomial(i))
    return WeylElement(total)


# -- action matrices ---------------------------------------------------------------

def exp_matrices(m: ExpModule) -> tuple[PolyMatrix, PolyMatrix]:
    """Closed-form (P, Q) for a non-dual exponential module of rank n = deg p."""
    if m.dual:
        raise DualUnsupported("closed-form matrices exist only for non-dual modules; "
                              "use action_matrices")
    n = _require_rank(m)
    alpha = m.p_weyl.coeffs
    lead = n * alpha[n]
    Q = [[Poly() for _ in range(n)] for _ in range(n)]
    P = [[Poly() for _ in range(n)] for _ in range(n)]
    for j in range(1, n + 1):
        Q[0][j - 1] = m.Q_X * (j * alpha[j])
    for i in range(1, n):
        Q[i][i - 1] = m.Q_X * (H - m.lam)
    for i in range(n - 1):
        P[i][i + 1] = m.P_X
    P[n - 1][0] = m.P_X * (H - (m.lam + 1)) * (1 / lead)
    for j in range(1, n):
        P[n - 1][j] = m.P_X * (-(j * alpha[j]) / lead)
    return PolyMatrix.of(P), PolyMatrix.of(Q)


def action_matrices(m: ExpModule) -> tuple[PolyMatrix, PolyMatrix]:
    """(P, Q) computed from the differential-operator action; valid for duals too."""
    n = _require_rank(m)
    P, Q = [], []
    for i in range(n):
        v = WeylElement(Poly.monomial(i))
        P.append(reduce_element(m, weyl_act(m, "y", v)))
        Q.append(reduce_element(m, weyl_act(m, "x", v)))
    return PolyMatrix.of(P), PolyMatrix.of(Q)


def verify_relations(P: PolyMatrix, Q: PolyMatrix, g: Poly) -> bool:
    """Q(h-1) P(h) - P(h+1) Q(h) == g(h) I."""
    if P.n != Q.n:
        raise SizeMismatch(f"P is {P.n}x{P.n} but Q is {Q.n}x{Q.n}")
    return Q.shift(-1) @ P - P.shift(1) @ Q == PolyMatrix.scalar(P.n, g)


def verify_central(P: PolyMatrix, Q: PolyMatrix, u: Poly, C) -> bool:
    """P(h+1) Q(h) == (u + C) I and Q(h-1) P(h) == (u(h-1) + C) I."""
    if P.n != Q.n:
        raise SizeMismatch(f"P is {P.n}x{P.n} but Q is {Q.n}x{Q.n}")
    C = as_rational(C)
    first = P.shift(1) @ Q == PolyMatrix.scalar(P.n, u + C)
    second = Q.shift(-1) @ P == PolyMatrix.scalar(P.n, u.shift(-1) + C)
    return first and second


# -- simplicity and rank-one identification ------------------------------------------

def exp_simple_sufficient(m: ExpModule) -> bool:
    """True guarantees simplicity; False means the sufficient test does not apply."""
    rest = m.central.R.with_removed(m.lam)
    if m.Xsub != rest:
        raise WrongX("the criterion needs X = R - {lambda}")
    return not any(precedes(m.lam, mu, strict=True) for mu in rest.underlying())


def identify_rank_one(m: ExpModule) -> tuple[Fraction, RootMultiset, Fraction]:
    """(C, X, xi) such that the degree-one module is isomorphic to F_xi A_C(X)."""
    if m.p_weyl.degree != 1:
        raise WrongDegree("identification needs an exponent polynomial of degree 1")
    alpha = m.p_weyl.coeffs[1]
    if m.dual:
        return m.C, m.Xsub.with_added(m.lam), 1 / alpha
    return m.C, m.Xsub, alpha


def identified_module(m: ExpModule) -> RankOneModule:
    C, X, xi = identify_rank_one(m)
    return RankOneModule(m.central, X, xi)
