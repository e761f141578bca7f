"""Real-rootedness by Sturm sequences, with no floating point anywhere.

Roots are isolated in rational intervals; rational roots come back as exact
points. The F family is real-rooted under sign conditions on (alpha, beta), and
outside them it can fail: at (1, -19/10) F_4 has a pair of complex zeros.
"""

from fractions import Fraction

from narayana import f_family, narayana_d, overline_n
from narayana.roots import count_sign_changes, is_real_rooted, isolate_real_roots, root_sign_counts


def show(label, p):
    iso = isolate_real_roots(p)
    print(f"{label}: {p}")
    print(f"  real-rooted: {is_real_rooted(p)}, {len(iso)} distinct real root(s)")
    for e in iso:
        where = f"= {e.lo}" if e.exact else f"in ({e.lo}, {e.hi})"
        print(f"    root {where}  multiplicity {e.multiplicity}")


show("N_D4", narayana_d(4))
show("F_4(1, -19/10)", f_family(4, 1, Fraction(-19, 10)))

print("\nN_{n+t,n} with t >= 2: one sign change, one positive root, n negative roots")
for n in range(0, 6):
    p = overline_n(3, n)
    print(f"  n={n}: degree {p.degree}, sign changes {count_sign_changes(p)}, roots {root_sign_counts(p)}")
