"""Alphabet calculus and truncated series in three sets of power sums.

An alphabet expression is a polynomial in the alphabets X, Y, Z whose
coefficients are polynomials in the sign ``eps`` (with ``eps**2 == 1``)
and the letters x, y, z, t (integer exponents).  Power sums act on it by

    p_n[A + B] = p_n[A] + p_n[B],    p_n[A B] = p_n[A] p_n[B],
    p_n[m A] = m p_n[A],             p_n[eps] = (-1)^n,    p_n[v] = v^n,

and ``sigma[F] = exp(sum p_n[F] / n)``.  Series are stored in the basis
p_rho(X) p_sigma(Y) p_tau(Z) with Laurent polynomial coefficients and are
truncated separately in each alphabet.
"""

from __future__ import annotations

import enum
import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .characters import character_value, enumerate_partitions, z_order
from .partition import Partition, conjugate, union, weight

LETTERS = ("x", "y", "z", "t")
ALPHABETS = ("X", "Y", "Z")
_ZERO4 = (0, 0, 0, 0)


class NonTruncatable(ValueError):
    """An alphabet-free monomial makes sigma[F] infinite in every degree."""


class CapMismatch(ValueError):
    pass


class CapExceeded(ValueError):
    pass


# ---------------------------------------------------------------------------
# Laurent polynomials


def _letter_exponents(**exps) -> tuple:
    return tuple(int(exps.get(v, 0)) for v in LETTERS)


def _add_exps(a: tuple, b: tuple) -> tuple:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def _monomial_key(e: tuple):
    neg = -sum(v for v in e if v < 0)
    pos = sum(v for v in e if v > 0)
    return (neg, pos, tuple(-v for v in e))


class LaurentPoly:
    """Exact-rational Laurent polynomial in the letters x, y, z, t."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[tuple(e)] = Fraction(c)
        self.terms = clean

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({_ZERO4: c})

    @classmethod
    def monomial(cls, coeff=1, **exps) -> "LaurentPoly":
        return cls({_letter_exponents(**exps): coeff})

    @classmethod
    def variable(cls, name: str, power: int = 1) -> "LaurentPoly":
        return cls.monomial(1, **{name: power})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == _ZERO4 for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(_ZERO4, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentPoly.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def scale_exponents(self, n: int) -> "LaurentPoly":
        """Substitute v -> v^n for every letter."""
        return LaurentPoly({tuple(n * v for v in e): c for e, c in self.terms.items()})

    def evaluate(self, x=1, y=1, z=1, t=1) -> Fraction:
        vals = [Fraction(v) for v in (x, y, z, t)]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    def coefficient(self, **exps) -> Fraction:
        return self.terms.get(_letter_exponents(**exps), Fraction(0))

    def items(self):
        """(exponent tuple, coefficient) pairs in display order."""
        return sorted(self.terms.items(), key=lambda kv: _monomial_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.items():
            factors = []
            for v, k in zip(LETTERS, e):
                if k == 1:
                    factors.append(v)
                elif k:
                    factors.append(f"{v}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


# ---------------------------------------------------------------------------
# alphabet expressions


class AlphabetExpr:
    """Normalized alphabet expression.

    Keys are ``(alphabet exponents, letter exponents, eps parity)`` and
    values are integer multiplicities.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for k, m in terms.items():
                if m:
                    clean[k] = int(m)
        self.terms = clean

    # constructors -------------------------------------------------------
    @classmethod
    def alphabet(cls, name: str) -> "AlphabetExpr":
        e = tuple(int(name == a) for a in ALPHABETS)
        if not any(e):
            raise ValueError(f"unknown alphabet {name!r}")
        return cls({(e, _ZERO4, 0): 1})

    @classmethod
    def letter(cls, name: str, power: int = 1) -> "AlphabetExpr":
        if name not in LETTERS:
            raise ValueError(f"unknown letter {name!r}")
        return cls({((0, 0, 0), _letter_exponents(**{name: power}), 0): 1})

    @classmethod
    def integer(cls, m: int) -> "AlphabetExpr":
        return cls({((0, 0, 0), _ZERO4, 0): m})

    @classmethod
    def eps(cls) -> "AlphabetExpr":
        return cls({((0, 0, 0), _ZERO4, 1): 1})

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "AlphabetExpr":
        if isinstance(other, AlphabetExpr):
            return other
        if isinstance(other, int):
            return AlphabetExpr.integer(other)
        raise TypeError(f"cannot combine AlphabetExpr with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, m in other.terms.items():
            out[k] = out.get(k, 0) + m
        return AlphabetExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return AlphabetExpr({k: -m for k, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for (a1, l1, s1), m1 in self.terms.items():
            for (a2, l2, s2), m2 in other.terms.items():
                key = (
                    (a1[0] + a2[0], a1[1] + a2[1], a1[2] + a2[2]),
                    _add_exps(l1, l2),
                    (s1 + s2) % 2,
                )
                out[key] = out.get(key, 0) + m1 * m2
        return AlphabetExpr(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, AlphabetExpr):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"AlphabetExpr({self.terms!r})"

    # structure ----------------------------------------------------------
    def by_alphabet_monomial(self) -> dict:
        """Group into ``{(eX, eY, eZ): scalar}``; scalars are AlphabetExprs."""
        groups: dict = {}
        for (a, l, s), m in self.terms.items():
            groups.setdefault(a, {})[((0, 0, 0), l, s)] = m
        return {a: AlphabetExpr(t) for a, t in groups.items()}

    def is_scalar(self) -> bool:
        return all(a == (0, 0, 0) for a, _, _ in self.terms)

    def check_truncatable(self):
        if any(a == (0, 0, 0) for a, _, _ in self.terms):
            raise NonTruncatable("sigma of an alphabet-free term has no degree bound")

    def scalar_power_sum(self, n: int) -> LaurentPoly:
        """p_n of a scalar (alphabet-free) expression."""
        out: dict = {}
        for (a, l, s), m in self.terms.items():
            if a != (0, 0, 0):
                raise ValueError("not a scalar expression")
            e = tuple(n * v for v in l)
            sgn = -1 if (s and n % 2) else 1
            out[e] = out.get(e, 0) + sgn * m
        return LaurentPoly(out)

    def substitute(self, alphabet: str, replacement: "AlphabetExpr") -> "AlphabetExpr":
        """Replace one alphabet atom by another expression."""
        idx = ALPHABETS.index(alphabet)
        out = AlphabetExpr()
        for (a, l, s), m in self.terms.items():
            rest = list(a)
            k = rest[idx]
            rest[idx] = 0
            term = AlphabetExpr({(tuple(rest), l, s): m})
            for _ in range(k):
                term = term * replacement
            out = out + term
        return out


X = AlphabetExpr.alphabet("X")
Y = AlphabetExpr.alphabet("Y")
Z = AlphabetExpr.alphabet("Z")
EPS = AlphabetExpr.eps()
ONE = AlphabetExpr.integer(1)


def letter(name: str, power: int = 1) -> AlphabetExpr:
    return AlphabetExpr.letter(name, power)


# ---------------------------------------------------------------------------
# power-sum series


def _repeat_union(rho: Partition, k: int) -> Partition:
    if k == 0:
        return ()
    if k == 1:
        return rho
    return tuple(sorted(rho * k, reverse=True))


class PowerSumSeries:
    """Truncated element of Sym(X) (x) Sym(Y) (x) Sym(Z) in power sums."""

    __slots__ = ("caps", "terms")

    def __init__(self, caps: Iterable[int], terms: Mapping | None = None):
        self.caps = tuple(int(c) for c in caps)
        if len(self.caps) != 3:
            raise ValueError("caps must have three entries")
        clean = {}
        if terms:
            for key, c in terms.items():
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly.constant(c)
                if c and self._fits(key):
                    clean[key] = c
        self.terms = clean

    def _fits(self, key) -> bool:
        return all(weight(p) <= cap for p, cap in zip(key, self.caps))

    @classmethod
    def one(cls, caps) -> "PowerSumSeries":
        return cls(caps, {((), (), ()): 1})

    @classmethod
    def zero(cls, caps) -> "PowerSumSeries":
        return cls(caps)

    def __eq__(self, other):
        if not isinstance(other, PowerSumSeries):
            return NotImplemented
        return self.caps == other.caps and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"PowerSumSeries(caps={self.caps}, {len(self.terms)} terms)"

    def _check(self, other):
        if self.caps != other.caps:
            raise CapMismatch(f"{self.caps} != {other.caps}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return PowerSumSeries(self.caps, out)

    def __neg__(self):
        return PowerSumSeries(self.caps, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PowerSumSeries":
        return PowerSumSeries(self.caps, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        self._check(other)
        cx, cy, cz = self.caps
        right = [(k, weight(k[0]), weight(k[1]), weight(k[2]), c) for k, c in other.terms.items()]
        out: dict = {}
        for (r1, s1, t1), c1 in self.terms.items():
            dx, dy, dz = weight(r1), weight(s1), weight(t1)
            for (r2, s2, t2), ex, ey, ez, c2 in right:
                if dx + ex > cx or dy + ey > cy or dz + ez > cz:
                    continue
                key = (union(r1, r2), union(s1, s2), union(t1, t2))
                prod = c1 * c2
                out[key] = out[key] + prod if key in out else prod
        return PowerSumSeries(self.caps, out)

    __rmul__ = scale

    def coefficient(self, rho=(), sigma=(), tau=()) -> LaurentPoly:
        return self.terms.get((tuple(rho), tuple(sigma), tuple(tau)), LaurentPoly())

    def omega(self, alphabet: str = "X") -> "PowerSumSeries":
        """Apply X -> -eps X, i.e. p_n(X) -> (-1)^(n-1) p_n(X)."""
        idx = ALPHABETS.index(alphabet)
        out = {}
        for key, c in self.terms.items():
            rho = key[idx]
            sgn = -1 if (weight(rho) - len(rho)) % 2 else 1
            out[key] = c * sgn
        return PowerSumSeries(self.caps, out)


def series_combine(op: str, a: PowerSumSeries, b: PowerSumSeries) -> PowerSumSeries:
    key = op.lower()
    if key == "add":
        return a + b
    if key == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def _alphabet_bound(e: tuple, caps: tuple) -> int:
    return min(cap // k for k, cap in zip(e, caps) if k > 0)


def _kernel(e: tuple, scalar: AlphabetExpr, caps: tuple) -> PowerSumSeries:
    """sigma[c M] = sum_rho p_rho[c] p_rho[M] / z_rho for one alphabet monomial M."""
    out = {}
    pk_cache: dict = {}
    for r in range(_alphabet_bound(e, caps) + 1):
        for rho in enumerate_partitions(r):
            c = LaurentPoly.constant(Fraction(1, z_order(rho)))
            for part in rho:
                if part not in pk_cache:
                    pk_cache[part] = scalar.scalar_power_sum(part)
                c = c * pk_cache[part]
            if c:
                out[tuple(_repeat_union(rho, k) for k in e)] = c
    return PowerSumSeries(caps, out)


def sigma_expand(F: AlphabetExpr, caps: Iterable[int]) -> PowerSumSeries:
    """Truncated expansion of sigma[F]."""
    caps = tuple(caps)
    F.check_truncatable()
    result = PowerSumSeries.one(caps)
    for e, scalar in sorted(F.by_alphabet_monomial().items()):
        result = result * _kernel(e, scalar, caps)
    return result


def power_sum_series(F: AlphabetExpr, n: int, caps: Iterable[int]) -> PowerSumSeries:
    """p_n[F] as a series (alphabet-free parts become constants)."""
    caps = tuple(caps)
    out = {}
    for e, scalar in F.by_alphabet_monomial().items():
        key = tuple(((n,) * k) for k in e)
        out[key] = scalar.scalar_power_sum(n)
    return PowerSumSeries(caps, out)


def chi_series(A: AlphabetExpr, caps: Iterable[int]) -> PowerSumSeries:
    """chi[A] = sum over n >= 1 of p_n[A], truncated."""
    caps = tuple(caps)
    A.check_truncatable()
    total = PowerSumSeries.zero(caps)
    bound = max(_alphabet_bound(e, caps) for e in A.by_alphabet_monomial())
    for n in range(1, bound + 1):
        total = total + power_sum_series(A, n, caps)
    return total


def chi_factor(S: PowerSumSeries, A: AlphabetExpr) -> PowerSumSeries:
    """S multiplied by chi[A]."""
    return S * chi_series(A, S.caps)


def schur_to_power(lam: Partition) -> dict:
    """s_lam = sum over rho of chi^lam_rho / z_rho p_rho."""
    lam = tuple(lam)
    out = {}
    for rho in enumerate_partitions(weight(lam)):
        v = character_value(lam, rho)
        if v:
            out[rho] = Fraction(v, z_order(rho))
    return out


def schur_plethysm(lam: Partition, F: AlphabetExpr, caps: Iterable[int]) -> PowerSumSeries:
    """s_lam[F] as a truncated series."""
    caps = tuple(caps)
    pn: dict = {}
    total = PowerSumSeries.zero(caps)
    for rho, c in schur_to_power(lam).items():
        term = PowerSumSeries.one(caps).scale(c)
        for part in rho:
            if part not in pn:
                pn[part] = power_sum_series(F, part, caps)
            term = term * pn[part]
        total = total + term
    return total


def extract_schur_coeff(S: PowerSumSeries, alpha=(), beta=(), gamma=()) -> LaurentPoly:
    """<S, s_alpha(X) s_beta(Y) s_gamma(Z)>."""
    shapes = (tuple(alpha), tuple(beta), tuple(gamma))
    for p, cap in zip(shapes, S.caps):
        if weight(p) > cap:
            raise CapExceeded(f"|{p}| exceeds cap {cap}")
    degs = tuple(weight(p) for p in shapes)
    total = LaurentPoly()
    for key, c in S.terms.items():
        if tuple(weight(p) for p in key) != degs:
            continue
        v = 1
        for shape, rho in zip(shapes, key):
            v *= character_value(shape, rho)
            if not v:
                break
        if v:
            total = total + c * v
    return total


# ---------------------------------------------------------------------------
# coefficient extraction without materializing sigma[F]


def _size_vectors(exps: list, target: tuple):
    """All (r_m) >= 0 with sum r_m * e_m == target."""
    n = len(exps)

    def rec(i, rem):
        if i == n:
            if rem == (0, 0, 0):
                yield ()
            return
        e = exps[i]
        top = min(r // k for k, r in zip(e, rem) if k > 0)
        for r in range(top + 1):
            new = (rem[0] - r * e[0], rem[1] - r * e[1], rem[2] - r * e[2])
            for tail in rec(i + 1, new):
                yield (r,) + tail

    yield from rec(0, target)


def sigma_coefficient(F: AlphabetExpr, alpha=(), beta=(), gamma=()):
    """<sigma[F], s_alpha(X) s_beta(Y) s_gamma(Z)> computed term by term.

    Only the tri-degree (|alpha|, |beta|, |gamma|) part of sigma[F] is
    visited.  Returns a Fraction when every coefficient of F is a
    constant and a LaurentPoly otherwise.
    """
    shapes = (tuple(alpha), tuple(beta), tuple(gamma))
    F.check_truncatable()
    groups = sorted(F.by_alphabet_monomial().items())
    exps = [e for e, _ in groups]
    scalars = [s for _, s in groups]
    pks = [dict() for _ in groups]
    numeric = all(
        all(l == _ZERO4 for _, l, _ in s.terms) for s in scalars
    )

    def pk(i, n):
        cache = pks[i]
        if n not in cache:
            v = scalars[i].scalar_power_sum(n)
            cache[n] = v.constant_term() if numeric else v
        return cache[n]

    def rho_weight(i, rho):
        w = Fraction(1, z_order(rho))
        for part in rho:
            w = w * pk(i, part)
            if not w:
                break
        return w

    target = tuple(weight(p) for p in shapes)
    total = Fraction(0) if numeric else LaurentPoly()
    for sizes in _size_vectors(exps, target):
        acc = {((), (), ()): Fraction(1) if numeric else LaurentPoly.constant(1)}
        for i, r in enumerate(sizes):
            if r == 0:
                continue
            e = exps[i]
            options = []
            for rho in enumerate_partitions(r):
                w = rho_weight(i, rho)
                if w:
                    options.append((rho, w))
            new: dict = {}
            for key, w0 in acc.items():
                for rho, w in options:
                    k2 = tuple(union(key[j], rho) if e[j] == 1 else
                               union(key[j], _repeat_union(rho, e[j])) if e[j] else key[j]
                               for j in range(3))
                    v = w0 * w
                    new[k2] = new[k2] + v if k2 in new else v
            acc = new
        for key, w in acc.items():
            v = 1
            for shape, rho in zip(shapes, key):
                v *= character_value(shape, rho)
                if not v:
                    break
            if v:
                total = total + w * v
    return total


def sigma_cost(F: AlphabetExpr, alpha=(), beta=(), gamma=()) -> int:
    """Rough count of cycle-type combinations sigma_coefficient would visit."""
    groups = sorted(F.by_alphabet_monomial().items())
    exps = [e for e, _ in groups]
    target = (weight(alpha), weight(beta), weight(gamma))
    total = 0
    for sizes in _size_vectors(exps, target):
        total += math.prod(len(enumerate_partitions(r)) for r in sizes)
    return total


# ---------------------------------------------------------------------------
# Jacobi-Trudi straightening and vertex operators


class Variant(enum.Enum):
    ROW = "row"
    COL = "col"


class SignedSchur:
    """``sign * s_shape``; ``sign == 0`` means the zero function."""

    __slots__ = ("sign", "shape")

    def __init__(self, sign: int, shape: Partition | None = None):
        self.sign = sign
        self.shape = tuple(shape) if sign else None

    def __eq__(self, other):
        if isinstance(other, SignedSchur):
            return (self.sign, self.shape) == (other.sign, other.shape)
        if isinstance(other, tuple):
            return (self.sign, self.shape) == other
        if other == 0:
            return self.sign == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.sign, self.shape))

    def __repr__(self):
        if not self.sign:
            return "SignedSchur(0)"
        return f"SignedSchur({self.sign:+d}, {self.shape})"


def straighten(seq: Iterable[int]) -> SignedSchur:
    """Rewrite the Jacobi-Trudi determinant of any integer sequence."""
    s = list(seq)
    mu = [v - j for j, v in enumerate(s, start=1)]
    if len(set(mu)) != len(mu):
        return SignedSchur(0)
    order = sorted(range(len(mu)), key=lambda i: -mu[i])
    inversions = sum(1 for i, j in itertools.combinations(order, 2) if i > j)
    parts = [mu[i] + j for j, i in enumerate(order, start=1)]
    if parts and parts[-1] < 0:
        return SignedSchur(0)
    while parts and parts[-1] == 0:
        parts.pop()
    return SignedSchur(-1 if inversions % 2 else 1, tuple(parts))


def vertex_term(alpha: Partition, n: int, variant: Variant | str = Variant.ROW) -> SignedSchur:
    """Coefficient of t^n produced by the row or column vertex operator."""
    variant = Variant(variant.lower() if isinstance(variant, str) else variant)
    alpha = tuple(alpha)
    if variant is Variant.ROW:
        return straighten((n,) + alpha)
    res = straighten((n,) + conjugate(alpha))
    if not res.sign:
        return res
    return SignedSchur(res.sign, conjugate(res.shape))


@lru_cache(maxsize=None)
def jacobi_trudi_terms(lam: Partition) -> tuple:
    """s_lam = sum of sign * h_comp over (sign, comp) pairs."""
    n = len(lam)
    out = []
    for perm in itertools.permutations(range(n)):
        comp = [lam[i] - i + perm[i] for i in range(n)]
        if any(c < 0 for c in comp):
            continue
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        out.append((-1 if inv % 2 else 1, tuple(comp)))
    return tuple(out)
