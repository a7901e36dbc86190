from __future__ import annotations

import csv
from pathlib import Path

import pytest

from kronlab.partition import parse

FIXTURES = Path(__file__).parent / "fixtures"


def load_hook_reference() -> list:
    with open(FIXTURES / "table1.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    return [[int(v) for v in row[1:]] for row in rows[1:]]


def load_abc_reference() -> list:
    """Rows (alpha, beta, gamma, gbb, A, (B_abc, B_bac, B_cab), C)."""
    with open(FIXTURES / "abc_reference.csv", newline="") as fh:
        rows = list(csv.reader(fh, delimiter=";"))[1:]
    out = []
    for rec in rows:
        a, b, c = (parse(x) for x in rec[:3])
        gbb, A, b1, b2, b3, C = (int(x) for x in rec[3:])
        out.append((a, b, c, gbb, A, (b1, b2, b3), C))
    return out


@pytest.fixture(scope="session")
def hook_reference():
    return load_hook_reference()


@pytest.fixture(scope="session")
def abc_reference():
    return load_abc_reference()


@pytest.fixture(autouse=True)
def _no_disk_cache(monkeypatch):
    monkeypatch.delenv("KRONLAB_CACHE_DIR", raising=False)
