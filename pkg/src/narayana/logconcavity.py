"""The L operator, k-fold log-concavity probes, Boros-Moll polynomials and Q_n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Poly, binom
from .families import narayana_rect
from .roots import is_real_rooted

REAL_ROOTED_NONNEG = "RealRootedNonneg"
BOUNDED_CHECK_ONLY = "BoundedCheckOnly"
DEFAULT_FOLDS = 5


class NegativeCoefficientError(ValueError):
    """Log-concavity is only defined for nonnegative sequences."""


@dataclass(frozen=True)
class LogConcavityReport:
    input_id: str
    max_verified_fold: int | None
    first_failure: tuple[int, int] | None
    certificate: str
    folds_requested: int | None = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def _check_nonneg(p: Poly) -> None:
    for k, c in enumerate(p.coeffs):
        if c < 0:
            raise NegativeCoefficientError(f"coefficient of x^{k} is negative ({c})")


def _l_seq(a: list[Fraction]) -> list[Fraction]:
    n = len(a)
    return [
        a[k] * a[k] - (a[k + 1] if k + 1 < n else 0) * (a[k - 1] if k > 0 else 0)
        for k in range(n)
    ]


def l_operator(p: Poly) -> Poly:
    """Coefficientwise a_k -> a_k^2 - a_{k+1} a_{k-1} with zero boundary terms."""
    return Poly(_l_seq(list(p.coeffs)))


def is_log_concave(p: Poly) -> bool:
    _check_nonneg(p)
    return all(v >= 0 for v in _l_seq(list(p.coeffs)))


def k_fold_log_concave(p: Poly, k: int, input_id: str = "") -> LogConcavityReport:
    """Iterate L up to k times, stopping at the first fold with a negative entry.

    The iteration runs on the full coefficient list (interior zeros included) so
    positions stay aligned with powers of x.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    _check_nonneg(p)
    seq = list(p.coeffs)
    for fold in range(1, k + 1):
        seq = _l_seq(seq)
        for idx, v in enumerate(seq):
            if v < 0:
                return LogConcavityReport(input_id, fold - 1, (fold, idx), BOUNDED_CHECK_ONLY, k)
    return LogConcavityReport(input_id, k, None, BOUNDED_CHECK_ONLY, k)


def certify_infinite_logconcavity(p: Poly, folds: int = DEFAULT_FOLDS, input_id: str = "") -> LogConcavityReport:
    """Real-rooted with nonnegative coefficients certifies every fold; else a bounded probe.

    ``max_verified_fold`` is None for a real-rootedness certificate (no bound).
    """
    _check_nonneg(p)
    if p.is_zero() or is_real_rooted(p):
        return LogConcavityReport(input_id, None, None, REAL_ROOTED_NONNEG, None)
    return k_fold_log_concave(p, folds, input_id)


def boros_moll_coeff(n: int, k: int) -> Fraction:
    """d_k(n) = 2^-2n sum_{j=k}^n 2^j C(2n-2j, n-j) C(n+j, j) C(j, k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return Fraction(0)
    total = sum(2**j * binom(2 * n - 2 * j, n - j) * binom(n + j, j) * binom(j, k) for j in range(k, n + 1))
    return Fraction(total, 4**n)


def boros_moll_poly(n: int) -> Poly:
    """P_n(x) = 2^-2n sum_j 2^j C(2n-2j, n-j) C(n+j, j) (x+1)^j, expanded."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    x_plus_1 = Poly((1, 1))
    acc = Poly()
    power = Poly.const(1)
    for j in range(n + 1):
        acc = acc + power * (2**j * binom(2 * n - 2 * j, n - j) * binom(n + j, j))
        power = power * x_plus_1
    return acc * Fraction(1, 4**n)


def q_poly(n: int) -> Poly:
    """Q_n = L(P_n)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"Q_n is defined for n >= 1, got {n!r}")
    return l_operator(boros_moll_poly(n))


@dataclass(frozen=True)
class QDecompositionReport:
    n: int
    double_sum: Poly
    q: Poly
    ratio: Fraction | None
    expected_ratio: int

    @property
    def matches_expected(self) -> bool:
        return self.ratio == self.expected_ratio


def q_double_sum(n: int) -> Poly:
    """sum_{i,j} 2^{i+j} C(2n-2i,n-i) C(2n-2j,n-j) C(n+i,i) C(n+j,j) N_{i,j}(x)."""
    w = [2**i * binom(2 * n - 2 * i, n - i) * binom(n + i, i) for i in range(n + 1)]
    acc = Poly()
    for i in range(n + 1):
        for j in range(n + 1):
            acc = acc + narayana_rect(i, j) * (w[i] * w[j])
    return acc


def q_decomposition_check(n: int) -> QDecompositionReport:
    """Compare the N_{i,j} double sum with Q_n and report the scalar ratio.

    ``ratio`` is None when the two are not proportional.
    """
    q = q_poly(n)
    s = q_double_sum(n)
    ratio = None
    if q.degree == s.degree and not q.is_zero():
        cand = s.lc / q.lc
        if s == q * cand:
            ratio = cand
    return QDecompositionReport(n, s, q, ratio, 2 ** (4 * n))
