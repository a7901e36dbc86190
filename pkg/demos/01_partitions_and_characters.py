"""Partition surgery and symmetric-group characters."""

from __future__ import annotations

from kronlab.characters import character_value, enumerate_partitions, z_order
from kronlab.partition import conjugate, cut_hook, cut_row, hook_add, pad_to_weight

lam = (8, 3, 3, 1)
print("lambda          ", lam)
print("conjugate       ", conjugate(lam))
print("first row cut   ", cut_row(lam))
print("row+column cut  ", cut_hook(lam))
print("padded to 25    ", pad_to_weight(lam, 25))
print("grow hook (7, 4)", hook_add(lam, 7, 4))

print("\ncharacter table of S_4 (rows: lambda, columns: cycle type)")
parts = enumerate_partitions(4)
print(" " * 14 + "".join(f"{str(r):>14}" for r in parts))
for mu in parts:
    print(f"{str(mu):>14}" + "".join(f"{character_value(mu, r):>14}" for r in parts))
print("centralizer orders:", [z_order(r) for r in parts])
