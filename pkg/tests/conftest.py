"""Shared fixtures and random instance generators."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import settings, strategies as st

from smithmod.exactpoly import Poly
from smithmod.rankone import build
from smithmod.rankn import ExpModule
from smithmod.rootorder import RootMultiset
from smithmod.smith import CentralCharacterData


def poly(*coeffs):
    return Poly([F(c) for c in coeffs])


def ms(*values):
    return RootMultiset(F(v) for v in values)


def sub_multiset(rng: random.Random, R: RootMultiset) -> RootMultiset:
    return RootMultiset.from_counts({v: rng.randint(0, k) for v, k in R.items()})


def random_rank_one(rng: random.Random, max_size=5, max_mult=2):
    """Rank-one module on two integer cosets (Z and 1/2 + Z), roots in [-3, 8]."""
    size = rng.randint(1, max_size)
    counts = {}
    while sum(counts.values()) < size:
        v = F(rng.randint(-3, 8))
        if rng.random() < 0.3:
            v += F(1, 2)
        if counts.get(v, 0) < max_mult:
            counts[v] = counts.get(v, 0) + 1
    R = RootMultiset.from_counts(counts)
    xi = rng.choice([F(1), F(-1, 2), F(3), F(2, 3)])
    C = rng.choice([F(0), F(1), F(-5, 2)])
    tw = rng.choice([F(1), F(2), F(-1, 3)])
    return build(R, xi, C, sub_multiset(rng, R), tw)


def random_rational_root(rng: random.Random) -> F:
    den = rng.choice([1, 1, 1, 2, 3])
    return F(rng.randint(-5 * den, 8 * den), den)


def random_exp_module(rng: random.Random, n=None, dual=False, max_size=5):
    size = rng.randint(1, max_size)
    R = RootMultiset(random_rational_root(rng) for _ in range(size))
    xi = rng.choice([F(1), F(-1, 2), F(2), F(5, 3)])
    C = rng.choice([F(0), F(3), F(-1, 4)])
    central = CentralCharacterData.from_roots(R, xi, C)
    lam = rng.choice(R.underlying())
    Xsub = sub_multiset(rng, R.with_removed(lam))
    n = rng.randint(1, 4) if n is None else n
    coeffs = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
    lead = F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    return ExpModule(central, Poly(coeffs + [lead]), lam, Xsub, dual)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(rationals, max_size=7).map(Poly)
small_polys = st.lists(rationals, max_size=11).map(Poly)  # degree <= 10
root_multisets = st.lists(
    st.one_of(st.integers(-4, 8).map(F), st.integers(-8, 16).map(lambda k: F(k, 2))),
    max_size=5).map(RootMultiset)


@pytest.fixture
def worked():
    """R = {0, 2, 5, 7}, leading 1, C = 0, X = {2, 7}."""
    return build(ms(0, 2, 5, 7), 1, 0, ms(2, 7))


@pytest.fixture
def small():
    """R = {0, 2}, X = {2}: u = h(h - 2)."""
    return build(ms(0, 2), 1, 0, ms(2))


settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
