"""Reduced Kronecker coefficients: three routes and the stabilization profile."""

from __future__ import annotations

from kronlab.coefficients import reduced_kronecker, stabilization_profile

trip = ((2, 1), (2,), (1, 1))
for method in ("stabilize", "brion"):
    print(f"{method:>9}:", reduced_kronecker(*trip, method=method))
print("   closed:", reduced_kronecker((3,), (2,), (2,), method="closed"), "for ((3),(2),(2))")

prof = stabilization_profile(*trip)
print("\nprofile of g(alpha[N], beta[N], gamma[N]):")
for n, v in zip(prof.weights, prof.values):
    print(f"  N={n:2d}  {v}")
print("stable from N =", prof.onset)

print("\nfirst columns growing: ((2,2) u 1^k, (3) u 1^k, (4) u 1^k)")
print([reduced_kronecker((2, 2) + (1,) * k, (3,) + (1,) * k, (4,) + (1,) * k, method="brion")
       for k in range(10)])
