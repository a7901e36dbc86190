"""Column and row polynomials, and the A, B, C data of a triple."""

from __future__ import annotations

from kronlab.stability import abc_coefficients, q_polynomial

for trip in (((), (), ()), ((), (), (1,)), ((), (), (2,))):
    print("col", trip, "->", q_polynomial(*trip, "col"))

trip = ((1,), (1,), (1,))
Q = q_polynomial(*trip, "col")
print("\nP(1,1,1) =", Q.at(1, 1, 1), "  P(-1,-1,-1) =", Q.at(-1, -1, -1))

abc = abc_coefficients((2,), (1,), (1,))
print("\nA, B, C for ((2),(1),(1)):", abc.record())
print("same through the series route:", abc_coefficients((2,), (1,), (1,), "series").record())
