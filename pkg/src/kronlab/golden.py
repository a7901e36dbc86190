"""Published reference values bundled with the package (used by ``verify tables``)."""

from __future__ import annotations

import csv
from fractions import Fraction
from importlib import resources

from .partition import parse

# reduced coefficients of ((2,2) u 1^k, (3) u 1^k, (4) u 1^k), k = 0..9
COLUMN_GROWTH_SEQUENCE = (1, 17, 66, 133, 180, 198, 203, 204, 204, 204)


def _read(name: str) -> str:
    return resources.files("kronlab").joinpath("data", name).read_text(encoding="utf-8")


def hook_table_csv() -> str:
    return _read("hook_table_33.csv")


def hook_table_rows() -> list:
    rows = list(csv.reader(_read("hook_table_33.csv").splitlines()))
    return [[int(v) for v in row[1:]] for row in rows[1:]]


def abc_reference_rows() -> list:
    """Rows (alpha, beta, gamma, gbb, A, (B_abc, B_bac, B_cab), C)."""
    out = []
    for rec in list(csv.reader(_read("abc_reference.csv").splitlines(), delimiter=";"))[1:]:
        a, b, c = (parse(x) for x in rec[:3])
        gbb, A, b1, b2, b3, C = (int(x) for x in rec[3:])
        out.append((a, b, c, gbb, A, (b1, b2, b3), C))
    return out


def stretched_two_row(k: int) -> Fraction:
    """Degree-3, period-6 quasipolynomial for the reduced coefficients of
    ((k), (k, k), (k, k))."""
    r = k % 6
    if r == 0:
        v = (k + 6) * (k * k + 6 * k + 12)
    elif r == 1:
        v = (k + 5) * (k * k + 7 * k + 4)
    elif r == 2:
        v = (k + 4) ** 3
    elif r == 3:
        v = (k + 3) * (k * k + 9 * k + 12)
    elif r == 4:
        v = (k + 2) * (k * k + 10 * k + 28)
    else:
        v = (k + 1) * (k + 4) * (k + 7)
    return Fraction(v, 72)
