"""Smith algebra data: the polynomials g and u, central characters, and
dimensions of the finite-dimensional simple modules L(lambda)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ConstantU, InvalidInput, NotConstant, NotSplit, ZeroG, ZeroLeading
from .exactpoly import ONE, Poly, poly_from_roots, rational_roots
from .rational import Fraction, as_rational, format_rational
from .rootorder import RootMultiset


def u_from_g(g: Poly, c0=0) -> Poly:
    """The unique u with u(h-1) - u(h) = g(h) and constant term ``c0``.

    Writing u = sum a_k h^k, the coefficient of h^i in u(h-1) - u(h) is
    sum_{k>i} a_k C(k,i) (-1)^(k-i), which is triangular in the a_k; solve
    from the top degree down.
    """
    if g.is_zero():
        raise ZeroG("g must be nonzero")
    d = g.degree
    a = [Fraction(0)] * (d + 2)
    a[0] = as_rational(c0)
    for i in range(d, -1, -1):
        acc = g[i]
        for k in range(i + 2, d + 2):
            acc -= a[k] * comb(k, i) * (-1) ** (k - i)
        a[i + 1] = -acc / (i + 1)
    return Poly(a)


def g_from_u(u: Poly) -> Poly:
    if u.degree < 1:
        raise ConstantU("u must have degree at least 1")
    return u.shift(-1) - u


def central_character(p: Poly, q: Poly, u: Poly) -> Fraction:
    """Value of the Casimir xy - u(h) on the rank-one module with y.1 = p, x.1 = q."""
    c = p.shift(1) * q - u
    if not c.is_constant():
        raise NotConstant(f"p(h+1)q(h) - u(h) = {c} is not constant")
    return c[0]


def simple_dim(u: Poly, lam) -> int | None:
    """Dimension of L(lam): least j >= 1 with u(lam) = u(lam - j), or None.

    The positive integer roots of j -> u(lam) - u(lam - j) are read off
    the exact rational root set of that polynomial.
    """
    if u.degree < 1:
        raise ConstantU("u must have degree at least 1")
    lam = as_rational(lam)
    diff = u(lam) - u.compose(Poly((lam, -1)))
    roots, _ = rational_roots(diff)
    positive = [int(r) for r in roots.underlying() if r.denominator == 1 and r >= 1]
    return min(positive) if positive else None


@dataclass(frozen=True)
class SmithAlgebra:
    """S(g) presented through u, with g(h) = u(h-1) - u(h)."""

    u: Poly

    def __post_init__(self):
        if self.u.degree < 1:
            raise ConstantU("u must have degree at least 1 (g = 0 is excluded)")

    @classmethod
    def from_g(cls, g: Poly, c0=0) -> "SmithAlgebra":
        return cls(u_from_g(g, c0))

    @property
    def g(self) -> Poly:
        return g_from_u(self.u)

    def central_data(self, C=0) -> "CentralCharacterData":
        return CentralCharacterData.from_u(self.u, C)


@dataclass(frozen=True)
class CentralCharacterData:
    """A central value C together with the split factorisation u + C = leading * Poly_R."""

    C: Fraction
    R: RootMultiset
    leading: Fraction

    def __post_init__(self):
        object.__setattr__(self, "C", as_rational(self.C))
        object.__setattr__(self, "leading", as_rational(self.leading))
        if self.leading == 0:
            raise ZeroLeading("leading coefficient must be nonzero")
        if not self.R:
            raise InvalidInput("u + C has degree at least 1, so R cannot be empty")

    @classmethod
    def from_roots(cls, R, leading=1, C=0) -> "CentralCharacterData":
        if not isinstance(R, RootMultiset):
            R = RootMultiset(R)
        return cls(as_rational(C), R, as_rational(leading))

    @classmethod
    def from_u(cls, u: Poly, C=0) -> "CentralCharacterData":
        if u.degree < 1:
            raise ConstantU("u must have degree at least 1")
        C = as_rational(C)
        roots, cofactor = rational_roots(u + C)
        if cofactor != ONE:
            raise NotSplit(f"u + C does not split over Q: leftover factor {cofactor}")
        return cls(C, roots, (u + C).leading)

    @property
    def u(self) -> Poly:
        return poly_from_roots(self.R, self.leading) - self.C

    @property
    def g(self) -> Poly:
        return g_from_u(self.u)

    @property
    def algebra(self) -> SmithAlgebra:
        return SmithAlgebra(self.u)

    def to_json(self) -> dict:
        return {"roots": self.R.to_json(), "leading": format_rational(self.leading),
                "C": format_rational(self.C)}
