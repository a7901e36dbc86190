"""Kronecker coefficients g(lam, lam, lam) for lam = (3,3) grown by a hook."""

from __future__ import annotations

from kronlab.stability import hook_stable_value, hook_table

rows = hook_table((3, 3), 9, 9)
for i, row in enumerate(rows):
    print(f"i={i}: " + " ".join(f"{v:4d}" for v in row))
print("\nlimit value deep inside the table:", hook_stable_value((2,), (2,), (2,)))
