"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored low degree first with no trailing zeros, so the
zero polynomial is the empty tuple and two polynomials are equal exactly
when their coefficient tuples are.  The degree of zero is ``-inf``.
"""

from __future__ import annotations

import math
from itertools import zip_longest

from .errors import (DivisionByZero, InvalidInput, NotDivisible, ZeroLeading,
                     ZeroPolynomial)
from .rational import Fraction, as_rational, format_rational
from .rootorder import RootMultiset


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def var(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def linear_root(cls, a) -> "Poly":
        """The monic factor h - a."""
        return cls((-as_rational(a), 1))

    # -- inspection -------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no monic associate")
        return self * (1 / self.leading)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.constant(other)

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = as_rational(other)
            return Poly(a * c for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly.constant(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "Poly"):
        other = self._lift(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = 1 / other.leading
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quo), Poly(rem[:db] if db else [])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """Whether ``self`` divides ``other``; only zero is divisible by zero."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(h))."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, s) -> "Poly":
        """self(h + s)."""
        s = as_rational(s)
        if s == 0:
            return self
        return self.compose(Poly((s, 1)))

    # -- comparison and display ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.constant(other).coeffs
        except InvalidInput:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return self.format("h")

    def format(self, var: str = "h") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        if not isinstance(data, list):
            raise InvalidInput(f"polynomial must be a coefficient list, got {data!r}")
        return cls(as_rational(c) for c in data)


ONE = Poly.constant(1)
ZERO = Poly()
H = Poly.var()


def poly_shift(f: Poly, s) -> Poly:
    return f.shift(s)


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Return ``a / b``, raising NotDivisible if the remainder is nonzero."""
    q, r = divmod(a, b)
    if not r.is_zero():
        raise NotDivisible(f"{b} does not divide {a}")
    return q


def poly_from_roots(X, xi=1) -> Poly:
    """``xi`` times the monic polynomial whose root multiset is ``X``."""
    xi = as_rational(xi)
    if xi == 0:
        raise ZeroLeading("leading coefficient must be nonzero")
    out = Poly.constant(xi)
    for root in X:
        out = out * Poly.linear_root(root)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _primitive_integer_form(f: Poly) -> list[int]:
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def multiplicity(f: Poly, root) -> int:
    """Multiplicity of ``root`` as a root of the nonzero polynomial ``f``."""
    if f.is_zero():
        raise ZeroPolynomial("every value is a root of zero")
    lin = Poly.linear_root(root)
    k = 0
    while True:
        q, r = divmod(f, lin)
        if not r.is_zero():
            return k
        f, k = q, k + 1


_DIVISOR_LIMIT = 10**10


def _sturm_chain(f: Poly) -> list[Poly]:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    return chain[:-1]


def _sign_changes(chain: list[Poly], x: Fraction) -> int:
    signs = [v > 0 for v in (c(x) for c in chain) if v != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def _isolated_candidates(f: Poly, max_den: int) -> list[Fraction]:
    """Rationals with denominator <= max_den that may be roots of square-free ``f``.

    Real roots are isolated exactly with a Sturm chain and narrowed below
    1/(2 max_den^2); distinct fractions of denominator <= max_den are at
    least 1/max_den^2 apart, so the nearest one to the midpoint is the only
    possible rational root in each interval.
    """
    chain = _sturm_chain(f)
    bound = 1 + max(abs(c / f.leading) for c in f.coeffs)
    eps = Fraction(1, 2 * max_den * max_den)
    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        count = _sign_changes(chain, a) - _sign_changes(chain, b)
        if count == 0:
            continue
        if count == 1 and b - a < eps:
            out.append(((a + b) / 2).limit_denominator(max_den))
            continue
        mid = (a + b) / 2
        stack.extend([(a, mid), (mid, b)])
    return out


def rational_roots(f: Poly) -> tuple[RootMultiset, Poly]:
    """Rational roots of ``f`` with multiplicity, and the monic rootless cofactor.

    Candidates come from the rational root theorem applied to the primitive
    integer form; each one is divided out as often as it divides exactly.
    When the extreme coefficients are too large to enumerate divisors, the
    candidates come from exact real-root isolation instead.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no finite root multiset")
    rest = f.monic()
    counts: dict[Fraction, int] = {}
    k = 0
    while rest.degree >= 1 and rest[0] == 0:
        rest = Poly(rest.coeffs[1:])
        k += 1
    if k:
        counts[Fraction(0)] = k
    if rest.degree >= 1:
        ints = _primitive_integer_form(rest)
        if max(abs(ints[0]), abs(ints[-1])) <= _DIVISOR_LIMIT:
            candidates = [sign * Fraction(num, den) for num in _divisors(ints[0])
                          for den in _divisors(ints[-1]) for sign in (1, -1)]
        else:
            squarefree = poly_divexact(rest, _gcd(rest, rest.derivative()))
            candidates = _isolated_candidates(squarefree, abs(ints[-1]))
        for cand in candidates:
            if cand in counts or rest.degree < 1 or rest(cand) != 0:
                continue
            m = multiplicity(rest, cand)
            counts[cand] = m
            rest = poly_divexact(rest, Poly.linear_root(cand) ** m)
    return RootMultiset.from_counts(counts), rest


def _gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()
