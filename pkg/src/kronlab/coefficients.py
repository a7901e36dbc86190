"""Kronecker, Littlewood-Richardson and reduced Kronecker coefficients.

Reduced coefficients have three independent routes:

* ``stabilize``: a Kronecker coefficient with first rows padded far enough;
* ``brion``: the coefficient of s_a(X) s_b(Y) s_c(Z) in
  sigma[XYZ + XY + XZ + YZ], extracted either through power sums or, for
  shapes with few rows, by Jacobi-Trudi expansion into complete
  homogeneous functions and counting contingency arrays;
* ``closed``: explicit formulas for one-row, one-column and the
  (1^a), (1^b), (2, 1^(c-1)) families.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import character_value, enumerate_partitions, z_order
from .partition import (
    Partition,
    ceil_fraction,
    conjugate,
    ell,
    first,
    in_cone,
    n0_bound,
    pad_to_weight,
    union,
    weight,
)
from .symseries import X, Y, Z, jacobi_trudi_terms, sigma_coefficient, sigma_cost


class ReducedMethod(enum.Enum):
    STABILIZE = "stabilize"
    BRION = "brion"
    CLOSED = "closed"


class ClosedFormUnavailable(ValueError):
    pass


def kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """g(lam, mu, nu) as a character sum; 0 when the weights differ."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    n = weight(lam)
    if weight(mu) != n or weight(nu) != n:
        return 0
    fact = math.factorial(n)
    total = 0
    for rho in enumerate_partitions(n):
        a = character_value(lam, rho)
        if not a:
            continue
        b = character_value(mu, rho)
        if not b:
            continue
        c = character_value(nu, rho)
        total += a * b * c * (fact // z_order(rho))
    q, r = divmod(total, fact)
    assert r == 0, "character sum not divisible by n!"
    return q


def littlewood_richardson(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu,nu} = <s_mu s_nu, s_lam> through power sums."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if weight(lam) != weight(mu) + weight(nu):
        return 0
    total = Fraction(0)
    nus = [(s, character_value(nu, s), z_order(s)) for s in enumerate_partitions(weight(nu))]
    for r in enumerate_partitions(weight(mu)):
        a = character_value(mu, r)
        if not a:
            continue
        zr = z_order(r)
        for s, b, zs in nus:
            if b:
                total += Fraction(a * b * character_value(lam, union(r, s)), zr * zs)
    assert total.denominator == 1
    return int(total)


# ---------------------------------------------------------------------------
# reduced Kronecker coefficients


def stabilize_weight(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Smallest padding weight used by the stabilize route."""
    need = max(weight(p) + first(p) for p in (alpha, beta, gamma))
    return max(ceil_fraction(n0_bound(alpha, beta, gamma)), need)


def padded_kronecker(alpha, beta, gamma, n: int) -> int:
    seqs = [pad_to_weight(p, n) for p in (alpha, beta, gamma)]
    if not all(ok for _, ok in seqs):
        raise ValueError(f"padding weight {n} too small for {(alpha, beta, gamma)}")
    return kronecker(*(s for s, _ in seqs))


def _reduced_stabilize(alpha, beta, gamma) -> int:
    return padded_kronecker(alpha, beta, gamma, stabilize_weight(alpha, beta, gamma))


BRION_KERNEL = X * Y * Z + X * Y + X * Z + Y * Z


def _brion_power_sum(alpha, beta, gamma) -> int:
    v = sigma_coefficient(BRION_KERNEL, alpha, beta, gamma)
    assert v.denominator == 1
    return int(v)


def _three_way(A: int, B: int, C: int) -> int:
    """Solutions of n+m+p=A, n+m+q=B, n+p+q=C in non-negative integers."""
    # n must have the parity of A + B + C, as do the three forms in M
    M = min(B + C - A, A + C - B, A + B - C)
    return M // 2 + 1 if M >= 0 else 0


def _contingency_count(A: tuple, B: tuple, C: tuple) -> int:
    """Coefficient of x^A y^B z^C in the product of 1/(1 - u) over the
    monomials x_i y_j z_k, x_i y_j, x_i z_k and y_j z_k.

    Variables other than x_1, y_1, z_1 carry small marginals, so every
    factor touching one of them is enumerated; the four factors on the
    first variables are then counted in closed form.
    """
    la, lb, lc = len(A), len(B), len(C)
    factors = []
    for i, j, k in itertools.product(range(la), range(lb), range(lc)):
        if (i, j, k) != (0, 0, 0):
            factors.append(((0, i), (1, j), (2, k)))
    for i, j in itertools.product(range(la), range(lb)):
        if (i, j) != (0, 0):
            factors.append(((0, i), (1, j)))
    for i, k in itertools.product(range(la), range(lc)):
        if (i, k) != (0, 0):
            factors.append(((0, i), (2, k)))
    for j, k in itertools.product(range(lb), range(lc)):
        if (j, k) != (0, 0):
            factors.append(((1, j), (2, k)))
    # a non-first variable is finished once its last factor is placed
    last_use = {}
    for idx, f in enumerate(factors):
        for var in f:
            if var[1] != 0:
                last_use[var] = idx
    closing = [[] for _ in factors]
    for var, idx in last_use.items():
        closing[idx].append(var)

    @lru_cache(maxsize=None)
    def rec(idx: int, state: tuple) -> int:
        if idx == len(factors):
            return _three_way(state[0][0], state[1][0], state[2][0])
        f = factors[idx]
        top = min(state[a][b] for a, b in f)
        total = 0
        for v in range(top + 1):
            new = [list(s) for s in state]
            for a, b in f:
                new[a][b] -= v
            if any(new[a][b] for a, b in closing[idx]):
                continue
            total += rec(idx + 1, tuple(tuple(s) for s in new))
        return total

    return rec(0, (tuple(A), tuple(B), tuple(C)))


def _brion_jacobi_trudi(alpha, beta, gamma) -> int:
    total = 0
    ta, tb, tc = (jacobi_trudi_terms(tuple(p)) for p in (alpha, beta, gamma))
    for (s1, c1), (s2, c2), (s3, c3) in itertools.product(ta, tb, tc):
        total += s1 * s2 * s3 * _contingency_count(c1 or (0,), c2 or (0,), c3 or (0,))
    return total


def jacobi_trudi_cost(alpha, beta, gamma) -> int:
    """Rough size of the Jacobi-Trudi route: terms times enumerated factors."""
    terms = math.prod(math.factorial(len(p)) for p in (alpha, beta, gamma))
    la, lb, lc = (max(len(p), 1) for p in (alpha, beta, gamma))
    small = la * lb * lc + la * lb + la * lc + lb * lc - 4
    spread = 1 + sum(weight(p) - first(p) for p in (alpha, beta, gamma))
    return terms * (1 + small) * spread


def brion(alpha, beta, gamma, backend: str = "auto") -> int:
    """Reduced Kronecker coefficient from the Brion-type generating series."""
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    if backend == "auto":
        ps = sigma_cost(BRION_KERNEL, alpha, beta, gamma)
        backend = "power_sum" if ps <= jacobi_trudi_cost(alpha, beta, gamma) else "jacobi_trudi"
    if backend == "power_sum":
        return _brion_power_sum(alpha, beta, gamma)
    if backend == "jacobi_trudi":
        return _brion_jacobi_trudi(alpha, beta, gamma)
    raise ValueError(f"unknown backend {backend!r}")


def _is_row(p) -> bool:
    return len(p) <= 1


def _is_column(p) -> bool:
    return all(x == 1 for x in p)


def closed_form(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Explicit values on the row, column and (1^a),(1^b),(2,1^(c-1)) families."""
    shapes = (tuple(alpha), tuple(beta), tuple(gamma))
    a, b, c = (weight(p) for p in shapes)
    if all(_is_row(p) for p in shapes):
        return 1 + min(ell(a, b, c)) // 2 if in_cone(a, b, c) else 0
    if all(_is_column(p) for p in shapes):
        return 1 if in_cone(a, b, c) else 0
    special = [i for i, p in enumerate(shapes) if len(p) >= 1 and p[0] == 2 and _is_column(p[1:])]
    if len(special) == 1:
        i = special[0]
        others = [shapes[j] for j in range(3) if j != i]
        if all(_is_column(p) for p in others):
            cc = weight(shapes[i]) - 1
            aa, bb = (weight(p) for p in others)
            d = abs(aa - bb)
            if cc == d and aa + bb > cc + 1:
                return 1
            if cc > d and aa + bb == cc + 1:
                return 1
            if cc > d and aa + bb > cc + 1:
                return 2
            return 0
    raise ClosedFormUnavailable(f"no closed form for {shapes}")


def reduced_kronecker(alpha, beta, gamma, method: ReducedMethod | str = ReducedMethod.STABILIZE) -> int:
    method = ReducedMethod(method.lower() if isinstance(method, str) else method)
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    if method is ReducedMethod.STABILIZE:
        return _reduced_stabilize(alpha, beta, gamma)
    if method is ReducedMethod.BRION:
        return brion(alpha, beta, gamma)
    return closed_form(alpha, beta, gamma)


@dataclass(frozen=True)
class StabilizationProfile:
    weights: tuple
    values: tuple
    stable_value: int
    onset: int

    def is_weakly_increasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))


def stabilization_profile(alpha, beta, gamma) -> StabilizationProfile:
    """g(alpha[N], beta[N], gamma[N]) from the first valid N to ceil(N0) + 2."""
    alpha, beta, gamma = tuple(alpha), tuple(beta), tuple(gamma)
    lo = max(weight(p) + first(p) for p in (alpha, beta, gamma))
    hi = max(ceil_fraction(n0_bound(alpha, beta, gamma)) + 2, lo + 1)
    weights = tuple(range(lo, hi + 1))
    values = tuple(padded_kronecker(alpha, beta, gamma, n) for n in weights)
    onset = weights[-1]
    for n, v in zip(reversed(weights), reversed(values)):
        if v != values[-1]:
            break
        onset = n
    return StabilizationProfile(weights, values, values[-1], onset)


def conjugate_pair_kronecker(lam, mu, nu) -> int:
    """g(lam', mu', nu), equal to g(lam, mu, nu)."""
    return kronecker(conjugate(lam), conjugate(mu), nu)
