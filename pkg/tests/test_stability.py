from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest

from kronlab.characters import enumerate_partitions, partitions_up_to
from kronlab.coefficients import closed_form, kronecker, reduced_kronecker
from kronlab.partition import partition, simple_column
from kronlab.stability import (
    LimitInfeasible,
    OutOfRegion,
    ReportKind,
    a_vanishing_check,
    abc_coefficients,
    abc_table_triples,
    classify_direction,
    classify_kronecker_direction,
    conj111_search,
    hook_bounds_d,
    hook_bounds_k,
    hook_stab_verify,
    hook_stable_value,
    hook_table,
    in_quasipoly_region,
    q_polynomial,
    quasipoly_eval,
    row_bounds_kprime,
)
from kronlab.symseries import LaurentPoly

x, y, z = (LaurentPoly.variable(v) for v in "xyz")
zi = LaurentPoly.variable("z", -1)
WEIGHT2 = list(partitions_up_to(2))


def test_q_polynomial_examples():
    assert q_polynomial((), (), (), "col").poly == LaurentPoly.constant(1)
    assert q_polynomial((), (), (1,), "col").poly == x + y + x * y - zi
    want = (x**2 * y**2 + x**2 * y + x * y**2 + x * y - x * y * zi - x * zi - y * zi
            + zi * zi)
    assert q_polynomial((), (), (2,), "col").poly == want
    assert str(q_polynomial((), (), (1,))) == "x + y + x*y - z^-1"


def test_q_polynomial_support_is_finite_and_matches_terms():
    Q = q_polynomial((1,), (1,), (1,), "row")
    assert len(Q.support()) == len(Q.poly.terms) > 0


def test_hook_stable_examples():
    for method in ("series", "poly", "limit"):
        assert hook_stable_value((), (), (), method) == 1
        assert hook_stable_value((3, 1), (), (), method) == 2
    assert hook_stable_value((2,), (2,), (2,)) == 145
    assert hook_stable_value((2,), (2,), (2,), "poly") == 145
    assert hook_stable_value((2,), (2,), (2,), "limit") == 145


def test_limit_method_has_a_ceiling():
    with pytest.raises(LimitInfeasible):
        hook_stable_value((2,), (2,), (2,), "limit", ceiling=16)


def test_limit_method_agrees_on_weight_one():
    for trip in itertools.product(list(partitions_up_to(1)), repeat=3):
        assert hook_stable_value(*trip, "limit") == hook_stable_value(*trip)


def test_hook_stable_on_one_nonempty_index():
    for alpha in partitions_up_to(6):
        is_hook = bool(alpha) and (len(alpha) == 1 or alpha[1] == 1)
        want = 1 if not alpha else (2 if is_hook else 0)
        assert hook_stable_value(alpha, (), ()) == want


def test_hook_bounds_k_examples():
    assert hook_bounds_k((), (), ()) == (0, 0, 0)
    assert hook_bounds_k((2,), (2,), (2,)) == (6, 6, 6)
    assert hook_bounds_k((2, 2), (), ()) == (6, 2, 2)


def test_row_bounds_examples():
    assert row_bounds_kprime((), (), ()) == (0, 0, 0)
    assert row_bounds_kprime((1,), (1,), (1,)) == (4, 4, 6)
    assert row_bounds_kprime((2, 2), (3,), (4,)) == (14, 15, 20)


def test_hook_bounds_d_example():
    assert hook_bounds_d((3, 3), (3, 3), (3, 3)) == (5, 5, 5, 3)
    with pytest.raises(ValueError):
        hook_bounds_d((3, 3), (3, 3), (2,))


def test_abc_examples():
    assert abc_coefficients((1,), (1,), (1,)).record() == {"A": 21, "B": [0, 0, 0], "C": 1}
    t = abc_coefficients((2,), (), ())
    assert (t.A, t.B[0], t.C) == (3, -2, 1)
    t = abc_coefficients((2,), (1,), (1,))
    assert (t.A, t.B[0], t.C) == (40, -25, 0)
    assert abc_coefficients((1,), (2,), (1,)).B[0] == -5
    assert t.B[1] == -5


def test_abc_auxiliary_relations():
    for trip in abc_table_triples(2):
        t = abc_coefficients(*trip)
        assert t.A == t.A_plus + t.A_minus
        assert t.C == t.A_plus - t.A_minus
        assert t.B[0] == t.A - Fraction(t.K, 2) - Fraction(t.A_minus, 2)


def test_abc_methods_agree_up_to_weight_2():
    for trip in itertools.product(WEIGHT2, repeat=3):
        a = abc_coefficients(*trip, "poly")
        b = abc_coefficients(*trip, "series")
        assert (a.A, a.B, a.C) == (b.A, b.B, b.C)


def test_symmetric_quantities_are_permutation_invariant():
    for trip in itertools.product(WEIGHT2, repeat=3):
        base = abc_coefficients(*trip)
        gbb = hook_stable_value(*trip)
        for perm in itertools.permutations(trip):
            t = abc_coefficients(*perm)
            assert (t.A, t.C) == (base.A, base.C)
            assert hook_stable_value(*perm) == gbb


def test_b_orderings_follow_permutations():
    for a, b, c in itertools.product(WEIGHT2, repeat=3):
        B = abc_coefficients(a, b, c).B
        assert B[1] == abc_coefficients(b, a, c).B[0]
        assert B[2] == abc_coefficients(c, a, b).B[0]


def test_b_is_integral_up_to_weight_3():
    # the constructor raises on a non-integral value
    for trip in abc_table_triples(3):
        t = abc_coefficients(*trip)
        assert all(isinstance(b, int) for b in t.B)
        assert t.A >= 0


def test_two_row_family_with_two_empty_indices():
    for n in range(0, 6):
        for a2 in range(0, n // 2 + 1):
            a1 = n - a2
            alpha = partition((a1, a2))
            t = abc_coefficients(alpha, (), ())
            assert t.A == a1 - a2 + 1
            assert t.C == ((-1) ** a2 if (a1 - a2) % 2 == 0 else 0)
            nearest = math.floor(Fraction(-3 * (a1 * a1 - (a2 - 1) ** 2), 4) + Fraction(1, 2))
            assert t.B[0] == nearest


def test_quasipoly_examples():
    assert quasipoly_eval((), (), (), 10, 8, 6) == 3
    assert quasipoly_eval((), (), (), 11, 8, 6) == 2
    assert quasipoly_eval((), (), (), 4, 2, 2) == 1
    with pytest.raises(OutOfRegion):
        quasipoly_eval((1,), (1,), (1,), 3, 2, 2)


@pytest.mark.parametrize("base", [((), (), ()), ((1,), (), ()), ((1,), (1,), ())])
def test_quasipoly_matches_stabilize(base):
    pts = sorted((p for p in itertools.product(range(20), repeat=3)
                  if in_quasipoly_region(*base, *p)), key=lambda p: (sum(p), p))[:20]
    assert len(pts) == 20
    abc = abc_coefficients(*base)
    for a, b, c in pts:
        shapes = [partition((h,) + p) for h, p in zip((a, b, c), base)]
        assert quasipoly_eval(*base, a, b, c, abc=abc) == reduced_kronecker(*shapes)


def test_column_hook_family_matches_generic_route():
    for a, b, c in itertools.product(range(1, 6), repeat=3):
        trip = ((1,) * a, (1,) * b, (2,) + (1,) * (c - 1))
        assert closed_form(*trip) == reduced_kronecker(*trip, method="brion")


def test_classify_examples():
    r = classify_direction((), (), (), 3, 1, 1)
    assert r.kind is ReportKind.EVENTUALLY_ZERO
    r = classify_direction((), (), (), 2, 1, 1)
    assert r.kind is ReportKind.EVENTUALLY_CONSTANT and r.value == 1 and r.probed
    r = classify_direction((), (), (), 1, 1, 1)
    assert r.kind is ReportKind.LINEAR and r.slope == Fraction(1, 2)


def test_classify_permutes_largest_component_first():
    r = classify_direction((), (), (), 1, 1, 2)
    assert r.permutation[0] == 2
    assert r.kind is ReportKind.EVENTUALLY_CONSTANT and r.value == 1


def test_classify_interior_of_first_subcone_offsets():
    # (3, 2, 2): l1 = 1 is the smallest form, strictly
    r = classify_direction((), (), (), 3, 2, 2)
    assert r.kind is ReportKind.LINEAR and not r.offsets_probed
    for n in range(4, 10):
        want = 1 + (n * 1) // 2
        got = r.slope * n + (r.even_offset if n % 2 == 0 else r.odd_offset)
        assert got == want == closed_form((3 * n,), (2 * n,), (2 * n,))


def test_classify_linear_terms_match_reduced_values():
    r = classify_direction((1,), (1,), (), 3, 2, 2)
    assert r.kind is ReportKind.LINEAR
    for n in range(8, 11):
        shapes = [partition((h * n + (p[0] if p else 0),) + p[1:]) for h, p in
                  zip((3, 2, 2), ((1,), (1,), ()))]
        off = r.even_offset if n % 2 == 0 else r.odd_offset
        assert r.slope * n + off == reduced_kronecker(*shapes, method="brion")


def test_classify_zero_when_a_vanishes():
    # the cut triple ((1,1,1), eps, eps) has A = 0
    assert abc_coefficients((1, 1, 1), (), ()).A == 0
    r = classify_direction((1, 1, 1, 1), (), (), 1, 1, 1)
    assert r.kind is ReportKind.EVENTUALLY_ZERO


def test_classify_kronecker_direction():
    r = classify_kronecker_direction((4, 1), (4, 1), (4, 1), (2, 1), (2, 1), (2, 1))
    assert r.kind is ReportKind.LINEAR
    assert r.slope == classify_direction((1,), (1,), (1,), 1, 1, 1).slope
    with pytest.raises(ValueError):
        classify_kronecker_direction((2, 2), (2, 2), (2, 2), (2, 1), (2, 1), (2, 1))
    with pytest.raises(ValueError):
        classify_kronecker_direction((4, 1), (4, 1), (4, 1), (4, 1, 1), (6,), (6,))


def test_hook_stab_examples():
    res = hook_stab_verify((3, 3), (3, 3), (3, 3), 7, 7, 7, 14)
    assert res.as_tuple() == (145, 145, 145, True)
    res = hook_stab_verify((3, 3), (3, 3), (3, 3), 1, 1, 1, 2)
    assert (res.g, res.g_bar_bar, res.region_ok) == (8, 145, False)
    res = hook_stab_verify((3, 3), (3, 3), (3, 3), 8, 8, 8, 16)
    assert res.g == res.g_bar == res.g_bar_bar
    with pytest.raises(ValueError):
        hook_stab_verify((3, 3), (3, 3), (3, 3), 8, 8, 8, 4)


def test_hook_table_corner_matches_kronecker():
    rows = hook_table((3, 3), 2, 2)
    assert rows[0][0] == 0 and rows[1][1] == 8
    assert rows[2][1] == kronecker((5, 3, 1), (5, 3, 1), (5, 3, 1))


def test_conj111_small():
    assert conj111_search(1) is None
    assert conj111_search(4) is None
    with pytest.raises(ValueError):
        conj111_search(0)


def test_a_vanishing_examples():
    assert a_vanishing_check((), (), (), 3)
    assert a_vanishing_check((1,), (1,), (1,), 3)
    assert abc_coefficients((1,), (1,), (1,)).A == 21
    assert a_vanishing_check((3,), (1,), (1,), 4)
    assert abc_coefficients((1, 1, 1), (), ()).A == 0
    assert a_vanishing_check((1, 1, 1), (), (), 3)
    with pytest.raises(ValueError):
        a_vanishing_check((3,), (), (), 2)


def test_col_polynomial_specializations_weight_one():
    for trip in itertools.product(list(partitions_up_to(1)), repeat=3):
        Q = q_polynomial(*trip)
        assert Q.at(1, 1, 1) == hook_stable_value(*trip)
        assert Q.at(-1, -1, -1) == kronecker(*trip)


def test_column_growth_reaches_hook_stable_value_small():
    k1 = hook_bounds_k((1,), (1,), (1,))[0]
    gbb = hook_stable_value((1,), (1,), (1,))
    for a in range(k1, k1 + 2):
        grown = [simple_column((1,), a)] * 3
        assert reduced_kronecker(*grown, method="brion") == gbb
