"""Checking three-term recurrences as exact polynomial identities.

Each identity is cleared of denominators, both sides are built exactly and the
difference is compared with zero. For the F family alpha and beta stay symbolic,
so one check covers every parameter value at that n.
"""

from dataclasses import replace
from fractions import Fraction

from narayana.recurrences import (
    RectCoefficients,
    check_f_recurrence,
    check_overline_recurrence,
    check_underline_recurrence,
)

print("F recurrence, symbolic in (alpha, beta):")
print("  ", " ".join(f"{n}:{'ok' if check_f_recurrence(n).verified else 'FAIL'}" for n in range(2, 13)))

# At n = 2 the left side is 6 T1 F_3; half of its x^1 coefficient is easy to expand by hand.
r = check_f_recurrence(2)
print("\n[x^1] of 3 T1 F_3:", r.lhs.coeffs[1] * Fraction(1, 2))

bad_overline = 0
bad_underline = 0
for t in range(0, 6):
    for n in range(1, 11):
        bad_overline += not check_overline_recurrence(t, n).verified
        bad_underline += not check_underline_recurrence(t, n).verified
print(f"\nN_{{n+t,n}} and N_{{n,n+t}} recurrences for t<=5, n<=10: "
      f"{bad_overline} and {bad_underline} failures")

# A single wrong coefficient is caught, and the residual says where.
c = RectCoefficients.overline(3, 4)
res = check_overline_recurrence(3, 4, replace(c, b1=-c.b1))
print("\nwith b1 negated at (t, n) = (3, 4): verified =", res.verified)
print("  leading residual term:", res.leading_residual_term())
