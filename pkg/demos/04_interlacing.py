"""Interlacing: the zeros of consecutive polynomials alternate.

g interlaces f when ... <= s2 <= r2 <= s1 <= r1, with r the zeros of f and s
those of g. Shared zeros are allowed in the weak relation and ruled out in the
strict one. The certificate at the end checks the sign conditions that carry
real-rootedness from F_n to F_{n+1}.
"""

from narayana import Poly, f_family, narayana_a, underline_n
from narayana.roots import interlaces, liu_wang_certificate_f

print("N_A(n) vs N_A(n+1):")
for n in range(1, 7):
    print(f"  n={n}: {interlaces(narayana_a(n), narayana_a(n + 1)).relation}")

print("\nN_{n,n+2} vs N_{n+1,n+3}:")
for n in range(0, 6):
    print(f"  n={n}: {interlaces(underline_n(2, n), underline_n(2, n + 1)).relation}")

g = Poly.from_roots([-1, -3])
f = Poly.from_roots([-1, -2])
print("\nshared zero: (x+1)(x+3) vs (x+1)(x+2) ->", interlaces(g, f).relation)
print("reversed                               ->", interlaces(f, g).relation)

print("\nF chain at (2, -1):")
for n in range(2, 8):
    print(f"  n={n}: {interlaces(f_family(n, 2, -1), f_family(n + 1, 2, -1)).relation}")

rep = liu_wang_certificate_f(5, 1, -1)
print("\ncertificate for F_5 -> F_6 at (1, -1):", "passed" if rep.passed else rep.failure)
for d in rep.root_details:
    print(f"  root in {d['interval']}: phi1 sign {d['phi1_sign']}, phi2 sign {d['phi2_sign']}")
