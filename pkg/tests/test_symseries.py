from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kronlab.characters import enumerate_partitions, partitions_up_to, z_order
from kronlab.partition import conjugate
from kronlab.symseries import (
    EPS,
    ONE,
    X,
    Y,
    Z,
    AlphabetExpr,
    CapExceeded,
    CapMismatch,
    LaurentPoly,
    NonTruncatable,
    PowerSumSeries,
    SignedSchur,
    Variant,
    chi_factor,
    extract_schur_coeff,
    letter,
    schur_plethysm,
    schur_to_power,
    series_combine,
    sigma_coefficient,
    sigma_expand,
    straighten,
    vertex_term,
)

x, y, z, t = (LaurentPoly.variable(v) for v in "xyzt")
F = Fraction


def single(rho):
    return (tuple(rho), (), ())


# -- LaurentPoly -------------------------------------------------------------


def test_laurent_text_form():
    p = x + y + x * y - LaurentPoly.variable("z", -1)
    assert str(p) == "x + y + x*y - z^-1"
    assert str(LaurentPoly()) == "0"
    assert str(3 * x**2 - 1) == "-1 + 3*x^2"
    assert str(LaurentPoly.constant(F(1, 2))) == "1/2"


monomials = st.builds(
    lambda c, i, j, k: LaurentPoly.monomial(c, x=i, y=j, z=k),
    st.integers(-3, 3), st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
polys = st.lists(monomials, max_size=4).map(lambda ms: sum(ms, LaurentPoly()))


@given(polys, polys, polys)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()


@given(polys, polys)
def test_laurent_evaluation_is_a_homomorphism(a, b):
    pt = (F(2), F(-1), F(1, 3))
    assert (a * b).evaluate(*pt) == a.evaluate(*pt) * b.evaluate(*pt)
    assert (a + b).evaluate(*pt) == a.evaluate(*pt) + b.evaluate(*pt)


# -- straightening and vertex terms ----------------------------------------------


def test_straighten_examples():
    assert straighten((1, 2)) == 0
    assert straighten((1, 3)) == SignedSchur(-1, (2, 2))
    assert straighten((5, 3, 1)) == (1, (5, 3, 1))
    assert straighten((0,)) == (1, ())
    assert straighten((-1,)) == 0


def _h(k, caps):
    if k < 0:
        return PowerSumSeries.zero(caps)
    return schur_plethysm((k,), X, caps)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-2, 4), min_size=1, max_size=3))
def test_straighten_matches_determinant(seq):
    # expand det(h_{s_i - i + j}) directly in power sums and compare
    n = len(seq)
    caps = (max(0, sum(seq)), 0, 0)
    det = PowerSumSeries.zero(caps)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = PowerSumSeries.one(caps).scale(-1 if inv % 2 else 1)
        for i in range(n):
            term = term * _h(seq[i] - i + perm[i], caps)
        det = det + term
    res = straighten(seq)
    if not res.sign:
        assert det == PowerSumSeries.zero(caps)
    else:
        want = schur_plethysm(res.shape, X, caps).scale(res.sign)
        assert det == want


def test_vertex_term_examples():
    assert vertex_term((3, 1), 5, Variant.ROW) == (1, (5, 3, 1))
    assert vertex_term((2,), 3, "col") == (1, (3, 1, 1))
    assert vertex_term((2,), 1, "row") == 0


@pytest.mark.parametrize("alpha", list(partitions_up_to(3)))
def test_column_vertex_is_conjugate_of_row(alpha):
    for n in range(-2, 6):
        row = vertex_term(conjugate(alpha), n, Variant.ROW)
        col = vertex_term(alpha, n, Variant.COL)
        assert row.sign == col.sign
        if row.sign:
            assert col.shape == conjugate(row.shape)


@pytest.mark.parametrize("alpha", list(partitions_up_to(3)))
def test_vertex_generating_identity(alpha):
    # sigma[tX] s_alpha[X - 1/t] collects to sum_n s_(n, alpha) t^n up to degree 6
    caps = (6, 0, 0)
    S = sigma_expand(letter("t") * X, caps) * schur_plethysm(alpha, X - letter("t", -1), caps)
    for lam in partitions_up_to(6):
        want = LaurentPoly()
        for n in range(-sum(alpha) - 1, 7):
            term = vertex_term(alpha, n, Variant.ROW)
            if term.sign and term.shape == lam:
                want = want + LaurentPoly.monomial(term.sign, t=n)
        assert extract_schur_coeff(S, lam) == want


# -- series ---------------------------------------------------------------------


def test_schur_to_power_examples():
    assert schur_to_power((1,)) == {(1,): 1}
    assert schur_to_power((2,)) == {(2,): F(1, 2), (1, 1): F(1, 2)}
    assert schur_to_power((1, 1)) == {(2,): F(-1, 2), (1, 1): F(1, 2)}


def test_sigma_x_is_complete_series():
    S = sigma_expand(X, (2, 0, 0))
    assert S.terms == {
        single(()): 1,
        single((1,)): 1,
        single((1, 1)): F(1, 2),
        single((2,)): F(1, 2),
    }


def test_sigma_xy_is_cauchy_kernel():
    S = sigma_expand(X * Y, (2, 2, 0))
    for r in partitions_up_to(2):
        for s in partitions_up_to(2):
            want = F(1, z_order(r)) if r == s else 0
            assert S.coefficient(r, s) == want


def test_sigma_minus_eps_x_is_elementary_series():
    S = sigma_expand(-EPS * X, (2, 0, 0))
    assert S.terms == {
        single(()): 1,
        single((1,)): 1,
        single((1, 1)): F(1, 2),
        single((2,)): F(-1, 2),
    }


def test_series_combine():
    caps = (4, 0, 0)
    S = sigma_expand(X, caps)
    assert series_combine("Mul", S, sigma_expand(-X, caps)) == PowerSumSeries.one(caps)
    assert series_combine("Add", S, PowerSumSeries.zero(caps)) == S
    assert series_combine("Mul", S, PowerSumSeries.one(caps)) == S
    with pytest.raises(CapMismatch):
        series_combine("Add", S, sigma_expand(X, (3, 0, 0)))


def test_non_truncatable():
    with pytest.raises(NonTruncatable):
        sigma_expand(X + ONE, (2, 0, 0))
    with pytest.raises(NonTruncatable):
        sigma_expand(EPS, (2, 0, 0))


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        extract_schur_coeff(sigma_expand(X, (2, 0, 0)), (3,))


def test_truncated_cauchy_identity():
    S = sigma_expand(X * Y, (5, 5, 0))
    for lam in partitions_up_to(5):
        for mu in partitions_up_to(5):
            assert extract_schur_coeff(S, lam, mu) == (1 if lam == mu else 0)


def test_extraction_examples():
    S = sigma_expand(X * Y, (3, 3, 0))
    assert extract_schur_coeff(S, (2, 1), (2, 1)) == 1
    assert extract_schur_coeff(S, (2,), (1, 1)) == 0
    assert extract_schur_coeff(sigma_expand(X * Y * Z, (1, 1, 1)), (1,), (1,), (1,)) == 1


POOL = (X, Y, 2 * X, -EPS * X, X * Y)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(POOL), st.sampled_from(POOL), st.integers(1, 4))
def test_sigma_is_additive(A, B, cap):
    caps = (cap, cap, 0)
    assert sigma_expand(A + B, caps) == sigma_expand(A, caps) * sigma_expand(B, caps)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(POOL + (X * Y + X, letter("x") * X - Y)), st.integers(1, 4))
def test_omega_is_an_involution(A, cap):
    caps = (cap, cap, 0)
    S = sigma_expand(A, caps)
    flipped = sigma_expand(A.substitute("X", -EPS * X), caps)
    assert S.omega("X") == flipped
    assert sigma_expand(A.substitute("X", -EPS * X).substitute("X", -EPS * X), caps) == S
    assert S.omega("X").omega("X") == S


def test_omega_exchanges_rows_and_columns():
    S = sigma_expand(X, (4, 0, 0)).omega("X")
    for lam in partitions_up_to(4):
        want = 1 if (not lam or set(lam) == {1}) else 0
        assert extract_schur_coeff(S, lam) == want


def _hook_sign(lam):
    if not lam:
        return 1
    if len(lam) > 1 and lam[1] > 1:
        return 0
    a, b = lam[0] - 1, len(lam) - 1
    return 2 * (-1) ** (1 + a + b)


def test_hook_expansion_single_alphabet():
    S = sigma_expand((EPS - ONE) * X, (4, 0, 0))
    for lam in partitions_up_to(4):
        assert extract_schur_coeff(S, lam) == _hook_sign(lam)


def test_hook_expansion_of_full_alphabet():
    W = X * Y + X * Z + Y * Z + X + Y + Z
    caps = (2, 2, 2)
    lhs = sigma_expand((EPS - ONE) * W, caps)
    rhs = PowerSumSeries.one(caps)
    for lam in partitions_up_to(6):
        c = _hook_sign(lam)
        if lam and c:
            rhs = rhs + schur_plethysm(lam, W, caps).scale(c)
    assert lhs == rhs


def test_chi_factor_examples():
    assert chi_factor(PowerSumSeries.one((1, 0, 0)), X).terms == {single((1,)): 1}
    S1 = chi_factor(sigma_expand(X, (5, 0, 0)), X)
    S2 = chi_factor(sigma_expand(2 * X, (5, 0, 0)), X)
    for lam in partitions_up_to(5):
        assert extract_schur_coeff(S1, lam) == (lam[0] if len(lam) == 1 else 0)
        if len(lam) == 2 or len(lam) == 1:
            l1, l2 = (lam + (0,))[:2]
            assert extract_schur_coeff(S2, lam) == F((l1 - l2 + 1) * (l1 + l2), 2)


KERNELS = [
    X * Y * Z + X * Y + X * Z + Y * Z,
    X * Y * Z + (ONE - EPS) * (X * Y + X * Z + Y * Z + X + Y + Z),
    X * Y * Z - EPS * letter("x") * X + letter("y") * Y * Z + letter("z", -1) * Z,
]


@pytest.mark.parametrize("k", range(len(KERNELS)))
def test_direct_extraction_matches_materialized_series(k):
    Fk = KERNELS[k]
    shapes = list(partitions_up_to(2))
    for a, b, c in itertools.product(shapes, repeat=3):
        S = sigma_expand(Fk, (sum(a), sum(b), sum(c)))
        assert extract_schur_coeff(S, a, b, c) == sigma_coefficient(Fk, a, b, c)


def test_direct_extraction_random_weight_three():
    rng = random.Random(7)
    shapes = list(partitions_up_to(3))
    Fk = KERNELS[2]
    for _ in range(10):
        a, b, c = (rng.choice(shapes) for _ in range(3))
        S = sigma_expand(Fk, (sum(a), sum(b), sum(c)))
        assert extract_schur_coeff(S, a, b, c) == sigma_coefficient(Fk, a, b, c)


def test_alphabet_expr_normalizes():
    assert EPS * EPS == ONE
    assert X * Y == Y * X
    assert (X + Y) - Y == X
    assert letter("x") * letter("x", -1) == ONE
    with pytest.raises(ValueError):
        AlphabetExpr.alphabet("Q")
    with pytest.raises(ValueError):
        letter("w")
