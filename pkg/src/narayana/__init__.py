"""Exact arithmetic toolkit for generalized Narayana polynomials.

Builds the Narayana-type families, verifies their three-term recurrences as
exact polynomial identities, decides real-rootedness and interlacing with
Sturm sequences, and probes log-concavity of the Boros-Moll polynomials.
"""

__version__ = "0.1.0"

from .arith import ALPHA, BETA, Bivar, ParamPoly, Poly, binom, param_substitute, poly_gcd
from .families import (
    build_family,
    f_family,
    f_family_symbolic,
    narayana_a,
    narayana_b,
    narayana_d,
    narayana_rect,
    overline_n,
    underline_n,
)
from .logconcavity import (
    boros_moll_coeff,
    boros_moll_poly,
    certify_infinite_logconcavity,
    is_log_concave,
    k_fold_log_concave,
    l_operator,
    q_decomposition_check,
    q_poly,
)
from .recurrences import check_f_recurrence, check_overline_recurrence, check_underline_recurrence
from .roots import (
    count_real_roots,
    count_sign_changes,
    interlaces,
    is_real_rooted,
    isolate_real_roots,
    liu_wang_certificate_f,
    sign_at_root,
    sturm_chain,
)
