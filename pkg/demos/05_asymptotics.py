"""Linear quasipolynomials and growth along a direction."""

from __future__ import annotations

from kronlab.coefficients import reduced_kronecker
from kronlab.stability import classify_direction, quasipoly_eval

print("rows (a), (b), (c): quasipolynomial vs direct computation")
for a, b, c in ((10, 8, 6), (11, 8, 6), (12, 9, 7)):
    print(f"  {(a, b, c)}: {quasipoly_eval((), (), (), a, b, c)}"
          f" = {reduced_kronecker((a,), (b,), (c,), method='brion')}")

for direction in ((3, 1, 1), (2, 1, 1), (1, 1, 1), (3, 2, 2)):
    print(direction, classify_direction((1,), (1,), (), *direction).record())
