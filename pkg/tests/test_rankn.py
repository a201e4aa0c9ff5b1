from fractions import Fraction as F
import random

import pytest
from hypothesis import given, strategies as st

from smithmod.errors import (DualUnsupported, InvalidInput, SizeMismatch, WrongDegree, WrongX)
from smithmod.exactpoly import ONE, H, Poly
from smithmod.rankn import (ExpModule, PolyMatrix, WeylElement, action_matrices, embed,
                            exp_matrices, exp_simple_sufficient, identify_rank_one,
                            khbasis_reduce, reduce_element, verify_central, verify_relations,
                            weyl_act)
from smithmod.smith import CentralCharacterData, SmithAlgebra

from conftest import ms, poly, random_exp_module

T = Poly.var()
SL2 = SmithAlgebra.from_g(poly(0, 1)).central_data(0)  # u = -h(h+1)/2, R = {0, -1}


def sl2(p, dual=False, Xsub=ms(-1)):
    return ExpModule(SL2, p, 0, Xsub, dual)


def tk(k, c=1):
    return WeylElement(Poly.monomial(k, c))


exp_modules = st.builds(lambda r, d: random_exp_module(r, dual=d),
                        st.randoms(use_true_random=False), st.booleans())


class TestWeylAction:
    def test_sl2_table_on_polynomials(self):
        m = sl2(Poly())
        for k in range(11):
            assert weyl_act(m, "x", tk(k)) == tk(k - 1, k * (k + 1)) if k else WeylElement(Poly())
            assert weyl_act(m, "y", tk(k)) == tk(k + 1, F(-1, 2))
            assert weyl_act(m, "h", tk(k)) == tk(k, k + 1)

    def test_sl2_with_exponential_factor(self):
        # with p = t the exponential contributes p' = 1 to every derivative
        m = sl2(T)
        assert weyl_act(m, "x", tk(0)).coeff == T + 2
        assert weyl_act(m, "h", tk(0)).coeff == T + 1
        assert weyl_act(m, "y", tk(0)).coeff == T * F(-1, 2)

    def test_z_acts_by_C(self):
        m = ExpModule(CentralCharacterData.from_roots(ms(0, 2, F(1, 2)), 3, F(5, 2)),
                      poly(1, -1, 2), 2, ms(0))
        for k in range(5):
            assert weyl_act(m, "z", tk(k)) == tk(k, F(5, 2))

    @given(exp_modules)
    def test_defining_relations(self, m):
        for i in range(2 * m.n + 1):
            v = tk(i)
            assert weyl_act(m, "hy", v) - weyl_act(m, "yh", v) == weyl_act(m, "y", v)
            assert weyl_act(m, "hx", v) - weyl_act(m, "xh", v) == weyl_act(m, "x", v).scale(-1)
            assert (weyl_act(m, "yx", v) - weyl_act(m, "xy", v)).coeff == \
                _apply_theta_poly(m, m.g, v.coeff)
            assert weyl_act(m, "z", v) == v.scale(m.C)

    def test_unknown_letter(self):
        with pytest.raises(ValueError):
            weyl_act(sl2(T), "q", tk(0))


def _apply_theta_poly(m, f, c):
    """f(h) acting on c e^p, by repeated application of h."""
    out = Poly()
    power = c
    for a in f.coeffs:
        out = out + power * a
        power = weyl_act(m, "h", WeylElement(power)).coeff
    return out


class TestBasisReduction:
    def test_basis_vectors(self):
        m = sl2(T ** 3 + T)
        assert khbasis_reduce(m, 1) == [Poly(), ONE, Poly()]
        assert khbasis_reduce(m, 0) == [ONE, Poly(), Poly()]

    def test_linear_exponent(self):
        m = ExpModule(SL2, poly(5, 3), 0, ms(-1))
        assert khbasis_reduce(m, 1) == [(H - 1) * F(1, 3)]

    def test_negative(self):
        with pytest.raises(ValueError):
            khbasis_reduce(sl2(T), -1)

    @given(exp_modules)
    def test_h_commutes_with_reduction(self, m):
        for s in range(2 * m.n + 2):
            image = reduce_element(m, weyl_act(m, "h", tk(s)))
            assert image == [H * c for c in khbasis_reduce(m, s)]

    @given(exp_modules)
    def test_embed_inverts_reduce(self, m):
        for s in range(2 * m.n + 1):
            coords = khbasis_reduce(m, s)
            assert embed(m, coords) == tk(s)
            assert reduce_element(m, embed(m, coords)) == coords

    def test_degree_zero_exponent_has_no_basis(self):
        with pytest.raises(WrongDegree):
            khbasis_reduce(sl2(Poly([3])), 0)


class TestMatrices:
    def test_rank_one_linear(self):
        alpha = F(3, 2)
        m = ExpModule(CentralCharacterData.from_roots(ms(0, 2, 3), 2, 0), alpha * T, 2, ms(3))
        P, Q = exp_matrices(m)
        assert Q == PolyMatrix.of([[m.Q_X * alpha]])
        assert P == PolyMatrix.of([[m.P_X * (H - 3) * (1 / alpha)]])
        assert P.rows[0][0].shift(1) * Q.rows[0][0] == m.u + m.C

    def test_sl2_rank_one(self):
        P, Q = exp_matrices(sl2(T))
        assert Q == PolyMatrix.of([[poly(1, 1)]])
        assert P == PolyMatrix.of([[Poly([F(1, 2), F(-1, 2)])]])

    def test_square_exponent(self):
        m = ExpModule(CentralCharacterData.from_roots(ms(0, 1, 4), 1, 0), T ** 2, 1, ms(4))
        P, Q = exp_matrices(m)
        assert Q.rows[0] == (Poly(), m.Q_X * 2)
        assert Q.rows[1] == ((H - 1) * m.Q_X, Poly())
        assert verify_relations(P, Q, m.g) and verify_central(P, Q, m.u, m.C)

    def test_dual_has_no_closed_form(self):
        with pytest.raises(DualUnsupported):
            exp_matrices(sl2(T, dual=True))

    @given(exp_modules)
    def test_closed_form_matches_action(self, m):
        P, Q = action_matrices(m)
        assert verify_relations(P, Q, m.g) and verify_central(P, Q, m.u, m.C)
        if not m.dual:
            assert exp_matrices(m) == (P, Q)

    @staticmethod
    def _bump(P, delta):
        return PolyMatrix.of([[e + delta if (i, j) == (0, 0) else e for j, e in enumerate(r)]
                              for i, r in enumerate(P.rows)])

    def test_mutations_fail(self):
        rng = random.Random(7)
        for _ in range(40):
            m = random_exp_module(rng)
            P, Q = exp_matrices(m)
            assert not verify_central(self._bump(P, ONE), Q, m.u, m.C)
            assert not verify_relations(self._bump(P, H), Q, m.g)
            assert not verify_central(P, Q, m.u, m.C + 1)

    def test_constant_bump_invisible_to_commutator(self):
        # with Q = [c] constant, P + 1 still satisfies Q(h-1)P - P(h+1)Q = g
        m = ExpModule(CentralCharacterData.from_roots(ms(-4, -3, 1), 2, F(-1, 4)), -3 * T, -4, ms())
        P, Q = exp_matrices(m)
        assert Q.rows[0][0].degree == 0
        assert verify_relations(self._bump(P, ONE), Q, m.g)
        assert not verify_central(self._bump(P, ONE), Q, m.u, m.C)

    def test_rank_one_pair(self, small):
        P, Q = PolyMatrix.of([[small.p]]), PolyMatrix.of([[small.q]])
        assert verify_relations(P, Q, small.g) and verify_central(P, Q, small.u, small.C)

    def test_size_mismatch(self):
        one = PolyMatrix.of([[ONE]])
        two = PolyMatrix.scalar(2, ONE)
        with pytest.raises(SizeMismatch):
            verify_relations(one, two, H)
        with pytest.raises(SizeMismatch):
            verify_central(one, two, H, 0)
        with pytest.raises(SizeMismatch):
            PolyMatrix.of([[ONE, ONE]])

    def test_json_round_trip(self):
        P, _ = exp_matrices(sl2(T ** 2 - T))
        assert PolyMatrix.from_json(P.to_json()) == P


class TestSimplicity:
    def test_examples(self):
        assert exp_simple_sufficient(sl2(T))
        R02 = CentralCharacterData.from_roots(ms(0, 2), 1, 0)
        assert not exp_simple_sufficient(ExpModule(R02, T, 0, ms(2)))
        Rh = CentralCharacterData.from_roots(ms(0, F(3, 2)), 1, 0)
        assert exp_simple_sufficient(ExpModule(Rh, T, 0, ms(F(3, 2))))

    def test_wrong_X(self):
        with pytest.raises(WrongX):
            exp_simple_sufficient(sl2(T, Xsub=ms()))


class TestIdentification:
    def test_sl2(self):
        assert identify_rank_one(sl2(T)) == (0, ms(-1), 1)
        assert identify_rank_one(sl2(T, dual=True)) == (0, ms(-1, 0), 1)

    def test_only_derivative_matters(self):
        C, X, xi = identify_rank_one(sl2(poly(5, 2)))
        assert xi == 2 and identify_rank_one(sl2(poly(-1, 2))) == (C, X, xi)
        assert identify_rank_one(sl2(poly(5, 2), dual=True))[2] == F(1, 2)

    def test_wrong_degree(self):
        with pytest.raises(WrongDegree):
            identify_rank_one(sl2(T ** 2))


class TestValidation:
    def test_lambda_must_be_root(self):
        with pytest.raises(InvalidInput):
            ExpModule(SL2, T, 1, ms())

    def test_X_excludes_lambda(self):
        with pytest.raises(InvalidInput):
            ExpModule(SL2, T, 0, ms(0))

    def test_json(self):
        d = sl2(T, dual=True).to_json()
        assert d["lambda"] == "0" and d["dual"] is True and d["Xsub"] == [["-1", 1]]
