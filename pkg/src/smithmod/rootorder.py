"""Finite multisets of rationals and the integer-step partial order on them.

Two rationals satisfy ``a <= b`` in this order when ``b - a`` is a
non-negative integer; the strict variant requires a positive integer.
Comparable elements therefore always share a coset of the integers, and
every multiset splits into maximal chains, one per coset.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping

from .errors import (InvalidInput, NotAMember, NotARoot, NotSubmultiset,
                     StarUndefined)
from .rational import Fraction, as_rational, format_rational


class RootMultiset:
    """Immutable finite multiset of rationals.

    Iteration yields elements in ascending order, repeated according to
    multiplicity.  ``len`` is the cardinality (sum of multiplicities).
    """

    __slots__ = ("_counts", "_hash")

    def __init__(self, elements: Iterable = ()):
        counts: Counter = Counter()
        for v in elements:
            counts[as_rational(v)] += 1
        self._counts = dict(sorted(counts.items()))
        self._hash = None

    @classmethod
    def from_counts(cls, counts: Mapping) -> "RootMultiset":
        ms = cls()
        clean = {}
        for v, k in counts.items():
            if not isinstance(k, int) or isinstance(k, bool) or k < 0:
                raise InvalidInput(f"bad multiplicity {k!r} for {v!r}")
            if k:
                v = as_rational(v)
                clean[v] = clean.get(v, 0) + k
        ms._counts = dict(sorted(clean.items()))
        return ms

    # -- basic protocol -------------------------------------------------
    def count(self, value) -> int:
        return self._counts.get(as_rational(value), 0)

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __iter__(self) -> Iterator[Fraction]:
        for v, k in self._counts.items():
            for _ in range(k):
                yield v

    def __contains__(self, value) -> bool:
        return self.count(value) > 0

    def items(self) -> tuple[tuple[Fraction, int], ...]:
        return tuple(self._counts.items())

    def underlying(self) -> tuple[Fraction, ...]:
        return tuple(self._counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._counts.items()))
        return self._hash

    def __le__(self, other: "RootMultiset") -> bool:
        return all(other._counts.get(v, 0) >= k for v, k in self._counts.items())

    def issubset(self, other: "RootMultiset") -> bool:
        return self <= other

    def __add__(self, other: "RootMultiset") -> "RootMultiset":
        c = Counter(self._counts)
        c.update(other._counts)
        return RootMultiset.from_counts(c)

    def __sub__(self, other: "RootMultiset") -> "RootMultiset":
        # saturating, like removing absent elements from a multiset
        return RootMultiset.from_counts(
            {v: max(k - other._counts.get(v, 0), 0) for v, k in self._counts.items()})

    def with_added(self, value) -> "RootMultiset":
        c = dict(self._counts)
        value = as_rational(value)
        c[value] = c.get(value, 0) + 1
        return RootMultiset.from_counts(c)

    def with_removed(self, value) -> "RootMultiset":
        value = as_rational(value)
        if value not in self._counts:
            raise NotAMember(f"{format_rational(value)} is not in {self}")
        c = dict(self._counts)
        c[value] -= 1
        return RootMultiset.from_counts(c)

    def shifted(self, s) -> "RootMultiset":
        s = as_rational(s)
        return RootMultiset.from_counts({v + s: k for v, k in self._counts.items()})

    def __repr__(self) -> str:
        return f"RootMultiset({[format_rational(v) for v in self]})"

    def __str__(self) -> str:
        return "{" + ", ".join(format_rational(v) for v in self) + "}"

    # -- wire format ----------------------------------------------------
    def to_json(self) -> list:
        return [[format_rational(v), k] for v, k in self._counts.items()]

    @classmethod
    def from_json(cls, data) -> "RootMultiset":
        """Accept ``[[value, mult], ...]`` pairs or a flat list of values."""
        if not isinstance(data, list):
            raise InvalidInput(f"multiset must be a list, got {data!r}")
        counts: Counter = Counter()
        for entry in data:
            if isinstance(entry, list):
                if len(entry) != 2:
                    raise InvalidInput(f"bad multiset entry {entry!r}")
                value, mult = entry
                if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                    raise InvalidInput(f"bad multiplicity in {entry!r}")
                counts[as_rational(value)] += mult
            else:
                counts[as_rational(entry)] += 1
        return cls.from_counts(counts)


def precedes(alpha, beta, strict: bool = False) -> bool:
    """Whether ``beta - alpha`` is a non-negative (``strict``: positive) integer."""
    d = as_rational(beta) - as_rational(alpha)
    if d.denominator != 1:
        return False
    return d >= 1 if strict else d >= 0


def coset_key(value) -> Fraction:
    """Representative of ``value + Z`` in ``[0, 1)``."""
    value = as_rational(value)
    return value - (value.numerator // value.denominator)


def chain_decompose(R: RootMultiset) -> list[RootMultiset]:
    """Split ``R`` into its maximal chains, ordered by smallest element."""
    groups: dict[Fraction, dict] = {}
    for v, k in R.items():
        groups.setdefault(coset_key(v), {})[v] = k
    parts = [RootMultiset.from_counts(g) for g in groups.values()]
    return sorted(parts, key=lambda part: part.underlying()[0])


def _require_sub(Z: RootMultiset, R: RootMultiset):
    if not Z <= R:
        raise NotSubmultiset(f"{Z} is not a submultiset of {R}")


def count_strictly_below(Z: RootMultiset, beta) -> int:
    return sum(k for v, k in Z.items() if precedes(v, beta, strict=True))


def count_at_or_above(Z: RootMultiset, beta) -> int:
    return sum(k for v, k in Z.items() if precedes(beta, v))


def ell(R: RootMultiset, Z: RootMultiset) -> int:
    """Number of pairs (a, b), a in R - Z, b in Z, a strictly below b (with multiplicity)."""
    _require_sub(Z, R)
    complement = R - Z
    return sum(k * count_strictly_below(complement, beta) for beta, k in Z.items())


def phi(R: RootMultiset, Z: RootMultiset, beta) -> int:
    """Multiplicity of the finite-dimensional factor with highest weight ``beta``."""
    _require_sub(Z, R)
    beta = as_rational(beta)
    if beta not in R:
        raise NotARoot(f"{format_rational(beta)} is not in {R}")
    return min(count_strictly_below(R - Z, beta), count_at_or_above(Z, beta))


def star(R: RootMultiset, X: RootMultiset, beta) -> RootMultiset:
    """Replace one copy of ``beta`` in ``X`` by the nearest complement element strictly below it."""
    _require_sub(X, R)
    beta = as_rational(beta)
    if beta not in X:
        raise NotAMember(f"{format_rational(beta)} is not in {X}")
    below = [v for v in (R - X).underlying() if precedes(v, beta, strict=True)]
    if not below:
        raise StarUndefined(f"no element of {R - X} lies strictly below {format_rational(beta)}")
    return X.with_removed(beta).with_added(max(below))
