"""Tour of the polynomial families.

The classical Narayana polynomial counts Dyck paths by peaks; the type-B and
type-D versions come from squared binomials. Both are special cases of a
two-parameter family F_n(alpha, beta), and the rectangular N_{n,m} family
contains N_A on its diagonal.
"""

from narayana import (
    f_family,
    f_family_symbolic,
    narayana_a,
    narayana_b,
    narayana_d,
    narayana_rect,
    overline_n,
    param_substitute,
)

print("Classical, type B and type D at n = 4:")
print("  N_A:", narayana_a(4))
print("  N_B:", narayana_b(4))
print("  N_D:", narayana_d(4))

# F_n interpolates: beta = 0 gives N_B, beta = -1 gives N_D.
print("\nF_4 at (1, 0) equals N_B:", f_family(4, 1, 0) == narayana_b(4))
print("F_4 at (1, -1) equals N_D:", f_family(4, 1, -1) == narayana_d(4))

# The symbolic version keeps alpha and beta as unknowns.
sym = f_family_symbolic(3)
print("\nF_3 with symbolic parameters:")
for k, c in enumerate(sym.coeffs):
    print(f"  [x^{k}] {c}")
print("substituted at (1, -1):", param_substitute(sym, 1, -1))

print("\nN_{n,m} on and next to the diagonal reproduces N_A:")
for n in range(5):
    print(f"  n={n}: {narayana_rect(n, n) == narayana_a(n) == narayana_rect(n + 1, n)}")

print("\nOff the diagonal the coefficients can turn negative:")
for t in range(2, 5):
    print(f"  N_{{3+{t},3}} = {overline_n(t, 3)}")
