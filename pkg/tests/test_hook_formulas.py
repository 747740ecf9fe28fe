from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from lpm_toric import hook_formulas as hf
from lpm_toric.poly import Poly, X
from lpm_toric.polytope import build_face_lattice, product_of_simplices_points
from lpm_toric.toric import toric_pairs

from conftest import HOOKS, hook


def falling_binom(n, k):
    """Oracle: n (n-1) ... (n-k+1) / k! as a polynomial in n, zero for k < 0."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    value = Fraction(num, factorial(k))
    assert value.denominator == 1
    return int(value)


def product_lattice_toric(m, n):
    poset = build_face_lattice(product_of_simplices_points(m, n)).to_poset()
    return toric_pairs(poset)[poset.top]


@given(st.integers(-30, 30), st.integers(-3, 30))
def test_binom_matches_polynomial_definition(n, k):
    assert hf.binom(n, k) == falling_binom(n, k)
    if n >= 0 and k >= 0:
        assert hf.binom(n, k) == comb(n, k)


def test_binom_conventions():
    assert [hf.binom(-1, k) for k in range(6)] == [1, -1, 1, -1, 1, -1]
    assert hf.binom(3, 5) == 0
    assert hf.binom(5, -1) == 0


def test_r_i():
    assert [hf.r_i(2, 2, i) for i in range(-1, 4)] == [1, 4, 4, 1, 0]
    assert hf.r_i(3, 2, 0) == 6
    assert hf.r_i(7, 3, -1) == 1
    q = hf.HookQuantities(3, 2)
    assert (q.m, q.n, q.r(0), q.C(1, 1)) == (2, 1, 6, 6)
    assert [q.S(l) for l in range(3)] == [1, 3, 3]


def test_f_vector_hook():
    assert hf.f_vector_hook(2, 2) == (5, 8, 5, 1)
    assert hf.f_vector_hook(1, 1) == (2, 1)
    assert hf.f_vector_hook(3, 2) == (7, 15, 14, 6, 1)


def test_g_hook():
    assert hf.g_hook(2, 2) == Poly((1, 1))
    for a in range(1, 8):
        assert hf.g_hook(a, 1) == Poly((1,))
    assert hf.g_hook(4, 3) == Poly((1, 6, 3))
    assert hf.g_hook(3, 4) == hf.g_hook(4, 3)


def test_f_hook():
    assert hf.f_hook(2, 2) == Poly((1, 2, 2, 1))
    assert hf.f_hook(1, 1) == Poly((1, 1))
    assert hf.f_hook(3, 2) == Poly((1, 3, 3, 3, 1))
    for a in range(1, 9):
        for b in range(1, a + 1):
            f = hf.f_hook(a, b)
            assert f.is_palindromic()
            assert f.degree == a + b - 1


@pytest.mark.parametrize("alpha,beta", HOOKS)
def test_closed_forms_match_pipeline(alpha, beta):
    pipe = hook(alpha, beta)
    assert pipe.toric.g == hf.g_hook(alpha, beta)
    assert pipe.toric.f == hf.f_hook(alpha, beta)
    assert pipe.f_vector == hf.f_vector_hook(alpha, beta)


def test_pyramid_relation_closed_forms():
    for a in range(1, 10):
        for b in range(1, a + 1):
            m, n = a - 1, b - 1
            assert hf.f_hook(a, b) == hf.gtilde_closed(m, n) + X * hf.ftilde_closed(m, n)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(m + 1)])
def test_product_of_simplices_closed_forms(m, n):
    pair = product_lattice_toric(m, n)
    assert pair.g == hf.gtilde_closed(m, n)
    assert pair.f == hf.ftilde_closed(m, n)


def test_ghat_neg():
    assert hf.ghat_neg(1) == Poly((1,))
    assert hf.ghat_neg(2) == -X
    assert hf.ghat_neg(4) == -(X ** 3)
    for t in range(1, 9):
        assert hf.ghat_shifted(-1, t - 1) == hf.ghat_neg(t)


def test_mhat_entries():
    assert hf.mhat_entry(4, 3, -1, 4) == hf.ghat_shifted(4, 3)
    assert hf.binom(5, 5) * hf.binom(4, 4) == 1  # C_{5,4}
    assert hf.mhat_entry(4, 3, 7, 1) == Poly((4,))
    assert hf.mhat_entry(4, 3, 0, 1) == Poly()
    # lower boundary of the (4, 3) matrix: C(4, t) (-x)^(t-1)
    for t in range(1, 5):
        assert hf.mhat_entry(4, 3, 7 - (t - 1), t) == comb(4, t) * hf.ghat_neg(t)
    with pytest.raises(IndexError):
        hf.mhat_entry(4, 3, 8, 1)
    with pytest.raises(IndexError):
        hf.mhat_entry(4, 3, 0, 5)


def test_mhat_matches_unmodified_matrix_off_boundary():
    # rows 0..m+n away from the modified boundary equal C_{a,b} gtilde_{a-1,b-1}(x+1)
    m, n = 4, 3
    for s in range(0, m + n + 1):
        for t in range(1, n + 2):
            a = m + n + 1 - s - t
            if a >= 1:
                expected = hf.binom(m + 1, a) * hf.binom(n + 1, t) * \
                    hf.gtilde_closed(a - 1, t - 1).substitute_shift(1)
                assert hf.mhat_entry(m, n, s, t) == expected


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 6) for n in range(1, m + 1)])
def test_coeff_fhat_matches_expansion(m, n):
    expanded = hf.fhat(m, n)
    assert expanded.min_degree >= -1
    for r in range(-1, m + n + 1):
        assert hf.coeff_fhat(m, n, r) == expanded.coeff(r)
    assert hf.coeff_fhat(m, n, m + n) == 1


def test_coeff_fhat_small():
    # direct expansion for (1, 1): 2x^-1 + 5 + 4x + x^2
    assert hf.fhat(1, 1) == Poly((2, 5, 4, 1), -1)
    assert hf.coeff_fhat(1, 1, 0) == 5


def test_ftilde_coeff_routes_agree():
    for m in range(0, 9):
        for n in range(0, m + 1):
            for r in range(0, m + n + 1):
                assert hf.coeff_ftilde_via_fhat(m, n, r) == hf.coeff_ftilde_direct(m, n, r)
    assert hf.coeff_ftilde_via_fhat(1, 1, 2) == 1
    assert hf.coeff_ftilde_direct(1, 1, 0) == 4


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(m + 1)])
def test_ftilde_coeff_routes_against_toric_recursion(m, n):
    shifted = product_lattice_toric(m, n).f.substitute_shift(1)
    for r in range(m + n + 1):
        assert hf.coeff_ftilde_via_fhat(m, n, r) == shifted.coeff(r)
        assert hf.coeff_ftilde_direct(m, n, r) == shifted.coeff(r)


def test_bridge_and_telescoping():
    for m in range(0, 6):
        for n in range(0, m + 1):
            lhs, rhs = hf.fhat_bridge(m, n)
            assert lhs == rhs
    for m in range(0, 9):
        for n in range(0, 9):
            assert hf.telescoping_sum(m, n) == X ** (m + n)


def test_triple_sum_examples():
    for m in range(0, 9):
        for n in range(0, m + 1):
            lhs, rhs = hf.triple_sum_identity(m, n, m + n)
            assert lhs == rhs == comb(m + n, n)
    lhs, rhs = hf.triple_sum_identity(2, 1, 2)
    assert lhs == rhs
    # direct big-integer sums for (2, 1, 2): rhs = C(4,3) + 2 C(3,2)
    assert rhs == 4 + 2 * 3


def test_triple_sum_sweep():
    for m in range(0, 9):
        for n in range(0, m + 1):
            for q in range(-1, m + n + 1):
                lhs, rhs = hf.triple_sum_identity(m, n, q)
                assert lhs == rhs
                for k in range(n + 1):
                    for i in range(n - k + 1):
                        for a, b in hf.sub_identities(m, n, q, k, i).values():
                            assert a == b


def test_triple_sum_outside_range_is_zero():
    for m in range(0, 6):
        for n in range(0, m + 1):
            for q in list(range(-8, -1)) + list(range(m + n + 1, m + n + 8)):
                assert hf.triple_sum_identity(m, n, q) == (0, 0)
