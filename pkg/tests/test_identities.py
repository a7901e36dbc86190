from __future__ import annotations

import pytest

from kronlab.identities import CHECKS, run_all


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_identity_holds(name):
    assert CHECKS[name](4) is None


def test_run_all_reports_every_check():
    results = run_all(3)
    assert set(results) == set(CHECKS)
    assert all(v is None for v in results.values())
