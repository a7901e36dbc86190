"""Integer partitions and the cone geometry of (first-row) weight triples.

Partitions are plain tuples of positive integers in weakly decreasing
order; the empty tuple is the empty partition.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Sequence

Partition = tuple  # tuple[int, ...], weakly decreasing, positive entries


class InvalidShape(ValueError):
    """Raised when a sequence is not (or would not become) a partition."""


class ConePosition(enum.Enum):
    OUTSIDE = "Outside"
    BORDER = "Border"
    INTERIOR = "Interior"


class Cone(enum.Enum):
    C = "C"
    C1 = "C1"


def partition(parts: Iterable[int] = ()) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple.

    Trailing zeros are dropped; anything else that is not weakly
    decreasing and non-negative raises :class:`InvalidShape`.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise InvalidShape(f"not a partition: {p}")
    return p


def is_partition(seq: Sequence[int]) -> bool:
    try:
        partition(seq)
    except InvalidShape:
        return False
    return True


def weight(p: Partition) -> int:
    return sum(p)


def length(p: Partition) -> int:
    return len(p)


def first(p: Partition) -> int:
    """First part, 0 for the empty partition."""
    return p[0] if p else 0


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def cut_row(p: Partition) -> Partition:
    """Drop the first part."""
    return tuple(p[1:])


def cut_hook(p: Partition) -> Partition:
    """Remove the first row and the first column of the diagram."""
    return tuple(x - 1 for x in p[1:] if x > 1)


def pad_to_weight(p: Partition, n: int) -> tuple[tuple[int, ...], bool]:
    """Prepend ``n - |p|`` to ``p``; also report whether that is a partition."""
    head = n - weight(p)
    seq = (head,) + tuple(p)
    if not p:
        return seq, head >= 0
    return seq, head >= p[0]


def add(p: Partition, q: Partition) -> Partition:
    n = max(len(p), len(q))
    a = tuple(p) + (0,) * (n - len(p))
    b = tuple(q) + (0,) * (n - len(q))
    return tuple(x + y for x, y in zip(a, b))


def union(p: Partition, q: Partition) -> Partition:
    return tuple(sorted(p + q, reverse=True))


def dilate(n: int, p: Partition) -> Partition:
    if n < 0:
        raise ValueError("dilation factor must be non-negative")
    if n == 0:
        return ()
    return tuple(n * x for x in p)


def partition_arith(op: str, *args):
    """Dispatch ``Add``, ``Union`` or ``Dilate`` by name."""
    key = op.lower()
    if key == "add":
        return add(*args)
    if key == "union":
        return union(*args)
    if key == "dilate":
        return dilate(*args)
    raise ValueError(f"unknown partition operation {op!r}")


def hook_add(p: Partition, a: int, b: int) -> Partition:
    """Return ``p + (a)`` with a column ``(1^b)`` unioned in.

    On the empty partition this is ``(a) u (1^b)``.
    """
    if a < 0 or b < 0:
        raise InvalidShape(f"hook_add{(p, a, b)}: a and b must be non-negative")
    head = add(p, (a,) if a else ())
    return union(head, (1,) * b)


def simple_column(p: Partition, a: int) -> Partition:
    """``p + (1^a)``: glue a new first column of height ``a`` onto ``p``.

    Requires ``a >= len(p)``.
    """
    if a < len(p):
        raise InvalidShape(f"column of height {a} is shorter than {p}")
    return add(p, (1,) * a)


# ---------------------------------------------------------------------------
# cone geometry


def ell(a, b, c) -> tuple:
    """The three linear forms b+c-a, a+c-b, a+b-c."""
    return (b + c - a, a + c - b, a + b - c)


def cone_position(a, b, c, cone: Cone | str = Cone.C) -> ConePosition:
    cone = Cone(cone) if not isinstance(cone, Cone) else cone
    l1, l2, l3 = ell(a, b, c)
    if cone is Cone.C:
        forms = (l1, l2, l3)
    else:
        forms = (l1, l2 - l1, l3 - l1)
    if any(f < 0 for f in forms):
        return ConePosition.OUTSIDE
    if any(f == 0 for f in forms):
        return ConePosition.BORDER
    return ConePosition.INTERIOR


def ell_and_cone(a, b, c, cone: Cone | str = Cone.C):
    return ell(a, b, c) + (cone_position(a, b, c, cone),)


def in_cone(a, b, c) -> bool:
    return cone_position(a, b, c) is not ConePosition.OUTSIDE


def murnaghan_admissible(alpha: Partition, beta: Partition, gamma: Partition) -> bool:
    return in_cone(weight(alpha), weight(beta), weight(gamma))


def n0_bound(alpha: Partition, beta: Partition, gamma: Partition) -> Fraction:
    """Padding weight beyond which Kronecker coefficients equal their reduced limit."""
    total = sum(weight(p) + first(p) for p in (alpha, beta, gamma))
    return Fraction(total, 2)


def ceil_fraction(q: Fraction) -> int:
    return math.ceil(q)


# ---------------------------------------------------------------------------
# text form


def parse(text: str) -> Partition:
    """Parse the comma-separated text form; ``""`` and ``"-"`` mean empty."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InvalidShape(f"cannot parse partition {text!r}") from exc
    return partition(parts)


def format_partition(p: Partition, empty: str = "-") -> str:
    return ",".join(str(x) for x in p) if p else empty
