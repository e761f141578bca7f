"""Iterated log-concavity and the Boros-Moll polynomials.

L maps a_k to a_k^2 - a_{k+1} a_{k-1}. A real-rooted polynomial with
nonnegative coefficients stays real-rooted under L, so every fold is
nonnegative. For the Boros-Moll P_n no such certificate is known; we can only
iterate a bounded number of folds. Q_n = L(P_n) is conjectured real-rooted.
"""

from narayana import narayana_b
from narayana.logconcavity import (
    boros_moll_poly,
    certify_infinite_logconcavity,
    k_fold_log_concave,
    l_operator,
    q_decomposition_check,
    q_poly,
)
from narayana.roots import is_real_rooted

p = narayana_b(4)
print("N_B4 =", p)
print("L(N_B4) =", l_operator(p))
print("certificate:", certify_infinite_logconcavity(p).certificate)

print("\nP_n, bounded probe of 4 folds:")
for n in range(1, 8):
    r = k_fold_log_concave(boros_moll_poly(n), 4)
    print(f"  n={n}: max verified fold {r.max_verified_fold}, first failure {r.first_failure}")

print("\nQ_n real-rooted?", [is_real_rooted(q_poly(n)) for n in range(1, 9)])

print("\nQ_n against the N_{i,j} double sum:")
for n in range(1, 6):
    rep = q_decomposition_check(n)
    print(f"  n={n}: ratio {rep.ratio} (2^(4n) = {rep.expected_ratio})")
