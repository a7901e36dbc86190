"""Self-checks of the series engine against classical identities.

Each check returns ``None`` on success or a short description of the first
failure; ``run_all`` collects them for ``kronlab verify identities``.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import character_value, enumerate_partitions, partitions_up_to, z_order
from .partition import conjugate, weight
from .symseries import (
    EPS,
    ONE,
    LaurentPoly,
    X,
    Y,
    chi_factor,
    extract_schur_coeff,
    letter,
    schur_plethysm,
    sigma_expand,
    vertex_term,
)


def check_orthogonality(max_degree: int):
    for n in range(max_degree + 1):
        parts = enumerate_partitions(n)
        for r in parts:
            for s in parts:
                v = sum(character_value(l, r) * character_value(l, s) for l in parts)
                want = z_order(r) if r == s else 0
                if v != want:
                    return f"column orthogonality fails at {r}, {s}"
    return None


def check_conjugate_sign(max_degree: int):
    for n in range(max_degree + 1):
        for lam in enumerate_partitions(n):
            for rho in enumerate_partitions(n):
                sgn = -1 if (n - len(rho)) % 2 else 1
                if character_value(conjugate(lam), rho) != sgn * character_value(lam, rho):
                    return f"conjugation sign fails at {lam}, {rho}"
    return None


def check_cauchy(max_degree: int):
    S = sigma_expand(X * Y, (max_degree, max_degree, 0))
    for lam in partitions_up_to(max_degree):
        for mu in partitions_up_to(max_degree):
            v = extract_schur_coeff(S, lam, mu)
            if v != (1 if lam == mu else 0):
                return f"Cauchy coefficient at {lam}, {mu} is {v}"
    return None


def check_omega(max_degree: int):
    caps = (max_degree, max_degree, 0)
    for F in (X, 2 * X, X * Y, X + Y, -EPS * X + X * Y):
        S = sigma_expand(F, caps)
        flipped = sigma_expand(F.substitute("X", -EPS * X), caps)
        if S.omega("X") != flipped:
            return f"omega substitution disagrees for {F!r}"
        if S.omega("X").omega("X") != S:
            return f"omega is not an involution on {F!r}"
    return None


def check_sigma_additive(max_degree: int):
    caps = (max_degree, max_degree, 0)
    pool = (X, Y, 2 * X, -EPS * X, X * Y)
    for A in pool:
        for B in pool:
            lhs = sigma_expand(A + B, caps)
            rhs = sigma_expand(A, caps) * sigma_expand(B, caps)
            if lhs != rhs:
                return f"sigma[A+B] != sigma[A] sigma[B] for {A!r}, {B!r}"
    return None


def check_vertex_row(max_degree: int, alpha_weight: int = 3):
    """sigma[tX] s_alpha[X - 1/t] collects to sum_n s_(n, alpha) t^n."""
    caps = (max_degree, 0, 0)
    kernel = sigma_expand(letter("t") * X, caps)
    shift = X - letter("t", -1)
    for alpha in partitions_up_to(min(alpha_weight, max_degree)):
        S = kernel * schur_plethysm(alpha, shift, caps)
        for lam in partitions_up_to(max_degree):
            got = extract_schur_coeff(S, lam)
            want = LaurentPoly()
            for n in range(-weight(alpha) - 1, max_degree + 1):
                term = vertex_term(alpha, n, "row")
                if term.sign and term.shape == tuple(lam):
                    want = want + LaurentPoly.monomial(term.sign, t=n)
            if got != want:
                return f"vertex identity fails for alpha={alpha}, lambda={lam}"
    return None


def _frobenius_hook(lam) -> tuple | None:
    if not lam or (len(lam) > 1 and lam[1] > 1):
        return None
    return lam[0] - 1, len(lam) - 1


def check_hook_expansion(max_degree: int):
    """sigma[(eps - 1) X] = 1 + 2 sum over hooks (a|b) of (-1)^(1+a+b) s_(a|b)."""
    S = sigma_expand((EPS - ONE) * X, (max_degree, 0, 0))
    for lam in partitions_up_to(max_degree):
        hook = _frobenius_hook(lam)
        if not lam:
            want = 1
        elif hook is None:
            want = 0
        else:
            want = 2 * (-1) ** (1 + sum(hook))
        if extract_schur_coeff(S, lam) != want:
            return f"hook expansion fails at {lam}"
    return None


def check_chi_formulas(max_degree: int):
    caps = (max_degree, 0, 0)
    S1 = chi_factor(sigma_expand(X, caps), X)
    S2 = chi_factor(sigma_expand(2 * X, caps), X)
    for lam in partitions_up_to(max_degree):
        want1 = len(lam) == 1 and lam[0] or 0
        if extract_schur_coeff(S1, lam) != want1:
            return f"sigma[X] chi[X] fails at {lam}"
        if len(lam) <= 2:
            l1, l2 = (tuple(lam) + (0, 0))[:2]
            want2 = Fraction((l1 - l2 + 1) * (l1 + l2), 2)
            if extract_schur_coeff(S2, lam) != want2:
                return f"sigma[2X] chi[X] fails at {lam}"
    return None


CHECKS = {
    "orthogonality": check_orthogonality,
    "conjugate_sign": check_conjugate_sign,
    "cauchy": check_cauchy,
    "omega": check_omega,
    "sigma_additive": check_sigma_additive,
    "vertex_row": check_vertex_row,
    "hook_expansion": check_hook_expansion,
    "chi_formulas": check_chi_formulas,
}


def run_all(max_degree: int) -> dict:
    return {name: fn(max_degree) for name, fn in CHECKS.items()}
