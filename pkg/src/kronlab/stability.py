"""Hook-stable limits, the A/B/C quasipolynomial data and effective bounds.

Everything here is driven by three alphabet expressions:

* ``H`` (with primed alphabets specialized to letters) whose sigma gives
  the polynomials P-row / P-col;
* ``XYZ + (1 - eps) W`` for column-stable values;
* ``XYZ + 2W`` and ``XYZ + (1 + eps) W`` for the A and C coefficients,

where ``W = XY + XZ + YZ + X + Y + Z``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .characters import enumerate_partitions
from .coefficients import kronecker, reduced_kronecker, stabilize_weight
from .partition import (
    Cone,
    ConePosition,
    Partition,
    conjugate,
    cone_position,
    cut_hook,
    cut_row,
    ell,
    first,
    hook_add,
    n0_bound,
    partition,
    simple_column,
    union,
    weight,
)
from .symseries import (
    EPS,
    ONE,
    AlphabetExpr,
    LaurentPoly,
    Variant,
    X,
    Y,
    Z,
    chi_series,
    extract_schur_coeff,
    letter,
    sigma_coefficient,
    sigma_expand,
)

W = X * Y + X * Z + Y * Z + X + Y + Z
HOOK_STABLE_KERNEL = X * Y * Z + (ONE - EPS) * W
A_KERNEL = X * Y * Z + 2 * W
C_KERNEL = X * Y * Z + (ONE + EPS) * W

LIMIT_WEIGHT_CEILING = 30
PROBE_START = 8
PROBE_WINDOW = 4
PROBE_LIMIT = 60


class LimitInfeasible(ValueError):
    pass


class OutOfRegion(ValueError):
    pass


def _triple(alpha, beta, gamma):
    return tuple(alpha), tuple(beta), tuple(gamma)


def _as_poly(v) -> LaurentPoly:
    return v if isinstance(v, LaurentPoly) else LaurentPoly.constant(v)


# ---------------------------------------------------------------------------
# the polynomials P-row and P-col


def specialized_alphabet(variant: Variant | str) -> AlphabetExpr:
    """H with X', Y', Z' replaced by x, y, z (row) or -eps x, ... (col)."""
    variant = Variant(variant.lower() if isinstance(variant, str) else variant)
    sign = ONE if variant is Variant.ROW else -EPS
    xp, yp, zp = (sign * letter(v) for v in "xyz")
    ratio = [sign * letter(v, -1) for v in "xyz"]
    h = (X + xp) * (Y + yp) * (Z + zp)
    h = h + (X + xp) * (Y + yp) + (X + xp) * (Z + zp) + (Y + yp) * (Z + zp)
    h = h - (xp * yp * zp + xp * yp + xp * zp + yp * zp)
    return h - X * ratio[0] - Y * ratio[1] - Z * ratio[2]


@dataclass(frozen=True)
class QPolynomial:
    variant: Variant
    indices: tuple
    poly: LaurentPoly

    def at(self, x=1, y=1, z=1) -> Fraction:
        return self.poly.evaluate(x, y, z)

    def support(self) -> list:
        return [e[:3] for e, _ in self.poly.items()]

    def __str__(self):
        return str(self.poly)


def q_polynomial(alpha, beta, gamma, variant: Variant | str = Variant.COL) -> QPolynomial:
    variant = Variant(variant.lower() if isinstance(variant, str) else variant)
    shapes = _triple(alpha, beta, gamma)
    poly = _as_poly(sigma_coefficient(specialized_alphabet(variant), *shapes))
    return QPolynomial(variant, shapes, poly)


# ---------------------------------------------------------------------------
# column-stable values


class HookMethod(enum.Enum):
    SERIES = "series"
    POLYNOMIAL = "poly"
    LIMIT = "limit"


def hook_bounds_k(alpha, beta, gamma) -> tuple:
    a, b, c = _triple(alpha, beta, gamma)
    ca, cb, cc = (first(conjugate(p)) for p in (a, b, c))
    return (
        weight(a) + first(a) + cb + cc,
        weight(b) + first(b) + ca + cc,
        weight(c) + first(c) + ca + cb,
    )


def limit_padding(alpha, beta, gamma) -> int:
    """Common column height t used by the limit route."""
    shapes = _triple(alpha, beta, gamma)
    return max(max(hook_bounds_k(*shapes)), *(len(p) for p in shapes))


def hook_stable_value(alpha, beta, gamma, method: HookMethod | str = HookMethod.SERIES,
                      ceiling: int = LIMIT_WEIGHT_CEILING) -> int:
    method = HookMethod(method.lower() if isinstance(method, str) else method)
    shapes = _triple(alpha, beta, gamma)
    if method is HookMethod.SERIES:
        v = sigma_coefficient(HOOK_STABLE_KERNEL, *shapes)
    elif method is HookMethod.POLYNOMIAL:
        v = q_polynomial(*shapes, Variant.COL).at(1, 1, 1)
    else:
        t = limit_padding(*shapes)
        grown = tuple(simple_column(p, t) for p in shapes)
        n = stabilize_weight(*grown)
        if n > ceiling:
            raise LimitInfeasible(
                f"padding weight {n} exceeds ceiling {ceiling}; use the series method")
        v = reduced_kronecker(*grown, method="stabilize")
    v = Fraction(v)
    assert v.denominator == 1
    return int(v)


# ---------------------------------------------------------------------------
# A, B, C


class ABCMethod(enum.Enum):
    POLYNOMIAL = "poly"
    SERIES = "series"


@dataclass(frozen=True)
class ABCTriple:
    A: int
    B: tuple  # (B_abc, B_bac, B_cab)
    C: int
    K: Optional[int] = None
    A_plus: Optional[int] = None
    A_minus: Optional[int] = None

    def record(self) -> dict:
        return {"A": self.A, "B": list(self.B), "C": self.C}


def _int(v) -> int:
    v = Fraction(v)
    if v.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {v}")
    return int(v)


def _abc_from_polynomial(shapes) -> ABCTriple:
    P = q_polynomial(*shapes, Variant.ROW).poly
    A = K1 = K2 = K3 = Ap = Am = Fraction(0)
    for (i, j, k, _), q in P.terms.items():
        A += q
        l1, l2, l3 = ell(i, j, k)
        K1 += q * l1
        K2 += q * l2
        K3 += q * l3
        if (i + j + k) % 2:
            Am += q
        else:
            Ap += q
    Bs = tuple(_int(A - K / 2 - Am / 2) for K in (K1, K2, K3))
    return ABCTriple(_int(A), Bs, _int(Ap - Am), _int(K1), _int(Ap), _int(Am))


def _b_from_series(shapes) -> int:
    caps = tuple(weight(p) for p in shapes)
    base = sigma_expand(A_KERNEL, caps)
    twist = sigma_expand((EPS - ONE) * W, caps)
    factor = (
        twist.scale(Fraction(1, 4))
        + chi_series(Y * Z - X, caps)
        - chi_series(W, caps).scale(Fraction(1, 2))
    )
    # the constant 3/4 only touches the empty-degree term
    factor = factor + type(factor).one(caps).scale(Fraction(3, 4))
    v = extract_schur_coeff(base * factor, *shapes)
    return _int(v.constant_term()) if v.is_constant() else _int(v)


def _abc_from_series(shapes) -> ABCTriple:
    a, b, c = shapes
    A = _int(sigma_coefficient(A_KERNEL, *shapes))
    C = _int(sigma_coefficient(C_KERNEL, *shapes))
    Bs = (_b_from_series((a, b, c)), _b_from_series((b, a, c)), _b_from_series((c, a, b)))
    return ABCTriple(A, Bs, C)


def abc_coefficients(alpha, beta, gamma, method: ABCMethod | str = ABCMethod.POLYNOMIAL) -> ABCTriple:
    method = ABCMethod(method.lower() if isinstance(method, str) else method)
    shapes = _triple(alpha, beta, gamma)
    if method is ABCMethod.POLYNOMIAL:
        return _abc_from_polynomial(shapes)
    return _abc_from_series(shapes)


# ---------------------------------------------------------------------------
# bounds and the quasipolynomial


def row_bounds_kprime(alpha, beta, gamma) -> tuple:
    a, b, c = _triple(alpha, beta, gamma)
    s = weight(a) + weight(b) + weight(c)
    return (s + first(b), s + first(c), s + first(a) + first(b) + first(c))


def hook_bounds_d(lam, mu, nu) -> tuple:
    """(d1, d2, d3, d) for the joint row-and-column growth of a triple."""
    shapes = _triple(lam, mu, nu)
    if any(not p for p in shapes) or len({weight(p) for p in shapes}) != 1:
        raise ValueError("need three non-empty partitions of the same weight")
    cutt = tuple(cut_hook(p) for p in shapes)
    cols = tuple(len(p) for p in shapes)
    ks = hook_bounds_k(*cutt)
    ds = tuple(k - l + 1 for k, l in zip(ks, ell(*cols)))
    d = n0_bound(*cutt) + Fraction(sum(cols), 2) - weight(shapes[0])
    return ds + (d,)


def in_quasipoly_region(alpha, beta, gamma, a, b, c) -> bool:
    shapes = _triple(alpha, beta, gamma)
    k1, k2, k3 = row_bounds_kprime(*shapes)
    return (a >= first(shapes[0]) and b >= first(shapes[1]) and c >= first(shapes[2])
            and a - b >= k1 and a - c >= k2 and b + c - a >= k3)


def quasipoly_value(abc: ABCTriple, a, b, c) -> Fraction:
    l1 = b + c - a
    v = Fraction(abc.A * l1, 2) + abc.B[0]
    if l1 % 2:
        v -= Fraction(abc.C, 2)
    return v


def quasipoly_eval(alpha, beta, gamma, a: int, b: int, c: int, abc: ABCTriple | None = None) -> int:
    """Reduced coefficient of ((a, alpha), (b, beta), (c, gamma)) from A, B, C."""
    shapes = _triple(alpha, beta, gamma)
    if not in_quasipoly_region(*shapes, a, b, c):
        raise OutOfRegion(f"{(a, b, c)} outside the validity region for {shapes}")
    abc = abc or abc_coefficients(*shapes)
    return _int(quasipoly_value(abc, a, b, c))


# ---------------------------------------------------------------------------
# asymptotics along a direction


class ReportKind(enum.Enum):
    EVENTUALLY_ZERO = "EventuallyZero"
    EVENTUALLY_CONSTANT = "EventuallyConstant"
    LINEAR = "Linear"


@dataclass
class StabilityReport:
    kind: ReportKind
    value: Optional[int] = None
    probed: bool = False
    slope: Optional[Fraction] = None
    even_offset: Optional[Fraction] = None
    odd_offset: Optional[Fraction] = None
    offsets_probed: bool = False
    permutation: tuple = (0, 1, 2)
    bounds: dict = field(default_factory=dict)

    def record(self) -> dict:
        out = {"kind": self.kind.value, "permutation": list(self.permutation)}
        if self.kind is ReportKind.EVENTUALLY_CONSTANT:
            out["value"] = self.value
            out["probed"] = self.probed
        if self.kind is ReportKind.LINEAR:
            out["slope"] = str(self.slope)
            out["even_offset"] = None if self.even_offset is None else str(self.even_offset)
            out["odd_offset"] = None if self.odd_offset is None else str(self.odd_offset)
            out["offsets_probed"] = self.offsets_probed
        if self.bounds:
            out["bounds"] = {k: str(v) for k, v in sorted(self.bounds.items())}
        return out


def _grow(p: Partition, n: int) -> Partition:
    if not p:
        return (n,) if n else ()
    return (p[0] + n,) + p[1:]


def direction_term(lam, mu, nu, a, b, c, n: int) -> int:
    """Reduced coefficient of (lam + n(a), mu + n(b), nu + n(c))."""
    shapes = (_grow(lam, n * a), _grow(mu, n * b), _grow(nu, n * c))
    if any(len(p) > 1 and p[0] < p[1] for p in shapes):
        return 0
    return reduced_kronecker(*shapes, method="brion")


def _probe_constant(term):
    values = []
    for n in range(PROBE_LIMIT + 1):
        values.append(term(n))
        if n >= PROBE_START + PROBE_WINDOW - 1:
            tail = values[-PROBE_WINDOW:]
            if len(set(tail)) == 1:
                return tail[0]
    return None


def classify_direction(lam, mu, nu, a: int, b: int, c: int) -> StabilityReport:
    """Behaviour of the reduced coefficients along (lam, mu, nu) + n (a, b, c)."""
    shapes = [tuple(lam), tuple(mu), tuple(nu)]
    theta = [a, b, c]
    lead = max(range(3), key=lambda i: (theta[i], -i))
    perm = (lead,) + tuple(i for i in range(3) if i != lead)
    shapes = [shapes[i] for i in perm]
    theta = [theta[i] for i in perm]
    pos_c = cone_position(*theta, Cone.C)
    if pos_c is ConePosition.OUTSIDE:
        return StabilityReport(ReportKind.EVENTUALLY_ZERO, permutation=perm)
    cuts = [cut_row(p) for p in shapes]
    abc = abc_coefficients(*cuts)
    if abc.A == 0:
        return StabilityReport(ReportKind.EVENTUALLY_ZERO, permutation=perm,
                               bounds={"A": abc.A})

    def term(n):
        return direction_term(*shapes, *theta, n)

    if pos_c is ConePosition.BORDER:
        value = _probe_constant(term)
        return StabilityReport(ReportKind.EVENTUALLY_CONSTANT, value=value, probed=True,
                               permutation=perm, bounds={"A": abc.A})
    l1 = ell(*theta)[0]
    slope = Fraction(abc.A * l1, 2)
    report = StabilityReport(ReportKind.LINEAR, slope=slope, permutation=perm,
                             bounds={"A": abc.A, "B": abc.B[0], "C": abc.C})
    if cone_position(*theta, Cone.C1) is ConePosition.INTERIOR:
        l0 = ell(*(first(p) for p in shapes))[0]
        base = Fraction(abc.A * l0, 2) + abc.B[0]
        half_c = Fraction(abc.C, 2)
        report.even_offset = base - (half_c if l0 % 2 else 0)
        report.odd_offset = base - (half_c if (l0 + l1) % 2 else 0)
        return report
    report.even_offset = _probe_offset(term, slope, 0)
    report.odd_offset = _probe_offset(term, slope, 1)
    report.offsets_probed = True
    return report


def _probe_offset(term, slope, parity):
    values = []
    n = PROBE_START + parity
    while n <= PROBE_LIMIT:
        values.append(term(n) - slope * n)
        if len(values) >= PROBE_WINDOW and len(set(values[-PROBE_WINDOW:])) == 1:
            return values[-1]
        n += 2
    return None


def classify_kronecker_direction(lam, mu, nu, alpha, beta, gamma) -> StabilityReport:
    """Behaviour of g(lam + n alpha, mu + n beta, nu + n gamma).

    Both triples must satisfy |lam| = |mu| = |nu| >= N0(cut lam, ...), and
    alpha, beta, gamma have at most two parts; the Kronecker coefficients
    then equal reduced ones along the second-row direction.
    """
    for trip in (_triple(lam, mu, nu), _triple(alpha, beta, gamma)):
        n = weight(trip[0])
        if any(weight(p) != n for p in trip) or n < n0_bound(*(cut_row(p) for p in trip)):
            raise ValueError(f"{trip} does not have stable first rows")
    if any(len(p) > 2 for p in (alpha, beta, gamma)):
        raise ValueError("direction partitions must have at most two parts")
    second = [p[1] if len(p) > 1 else 0 for p in (alpha, beta, gamma)]
    return classify_direction(cut_row(lam), cut_row(mu), cut_row(nu), *second)


# ---------------------------------------------------------------------------
# joint row and column growth


@dataclass(frozen=True)
class HookStabResult:
    g: int
    g_bar: int
    g_bar_bar: int
    region_ok: bool

    def as_tuple(self):
        return (self.g, self.g_bar, self.g_bar_bar, self.region_ok)


def hook_stab_region(lam, mu, nu, a, b, c, m) -> bool:
    d1, d2, d3, d = hook_bounds_d(lam, mu, nu)
    l1, l2, l3 = ell(a, b, c)
    return (l1 >= d1 and l2 >= d2 and l3 >= d3
            and m - Fraction(a + b + c, 2) >= d and m >= max(a, b, c))


def hook_stab_verify(lam, mu, nu, a: int, b: int, c: int, m: int) -> HookStabResult:
    shapes = _triple(lam, mu, nu)
    if any(not p for p in shapes) or len({weight(p) for p in shapes}) != 1:
        raise ValueError("need three non-empty partitions of the same weight")
    if m < max(a, b, c):
        raise ValueError("m must be at least a, b and c")
    rows = (a, b, c)
    g = kronecker(*(hook_add(p, m - r, r) for p, r in zip(shapes, rows)))
    g_bar = reduced_kronecker(*(union(cut_row(p), (1,) * r) for p, r in zip(shapes, rows)),
                              method="brion")
    g_bb = hook_stable_value(*(cut_hook(p) for p in shapes))
    return HookStabResult(g, g_bar, g_bb, hook_stab_region(*shapes, a, b, c, m))


# ---------------------------------------------------------------------------
# searches and tables


def _sorted_triples(n: int):
    return itertools.combinations_with_replacement(enumerate_partitions(n), 3)


def conj111_search(max_weight: int):
    """First triple with g(t) > g(t with one box added to row and column), or None."""
    if max_weight < 1:
        raise ValueError("max_weight must be at least 1")
    for n in range(1, max_weight + 1):
        for trip in _sorted_triples(n):
            lhs = kronecker(*trip)
            if not lhs:
                continue
            rhs = kronecker(*(hook_add(p, 1, 1) for p in trip))
            if lhs > rhs:
                return trip
    return None


def a_vanishing_check(alpha, beta, gamma, probe_bound: int) -> bool:
    """Does A = 0 agree with vanishing of every probed second-row coefficient?"""
    shapes = _triple(alpha, beta, gamma)
    if probe_bound < max(first(p) for p in shapes):
        raise ValueError("probe_bound must be at least the largest first part")
    A = abc_coefficients(*shapes).A
    all_zero = True
    ranges = [range(first(p), probe_bound + 1) for p in shapes]
    for heads in itertools.product(*ranges):
        probe = [partition((h,) + p) if h else p for h, p in zip(heads, shapes)]
        if reduced_kronecker(*probe, method="brion"):
            all_zero = False
            break
    return (A == 0) == all_zero


def hook_table(base: Partition, imax: int, jmax: int) -> list:
    """Rows i of g(base (+) {i}{j}) for the triple (base, base, base)."""
    base = tuple(base)
    rows = []
    for i in range(imax + 1):
        row = []
        for j in range(jmax + 1):
            lam = hook_add(base, i, j)
            row.append(kronecker(lam, lam, lam))
        rows.append(row)
    return rows


def abc_table_row(alpha, beta, gamma, abc_method="poly", hook_method="series") -> dict:
    shapes = _triple(alpha, beta, gamma)
    abc = abc_coefficients(*shapes, method=abc_method)
    return {
        "alpha": shapes[0],
        "beta": shapes[1],
        "gamma": shapes[2],
        "gbb": hook_stable_value(*shapes, method=hook_method),
        "A": abc.A,
        "B": abc.B,
        "C": abc.C,
    }


def abc_table_triples(max_weight: int):
    """Triples of weight <= max_weight up to permutation, in a fixed order."""
    parts = [p for n in range(max_weight + 1) for p in enumerate_partitions(n)]
    return list(itertools.combinations_with_replacement(parts, 3))
