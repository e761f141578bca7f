"""Constructors for the Narayana-type polynomial families.

Every constructor returns an exact ``Poly``; ``f_family_symbolic`` returns a
``ParamPoly`` with alpha and beta kept symbolic.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import ALPHA, BETA, Bivar, ParamPoly, Poly, Scalar, as_fraction, binom


def _check_nonneg(**kwargs) -> None:
    for name, v in kwargs.items():
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")


def narayana_a(n: int) -> Poly:
    """Classical Narayana polynomial sum_k C(n+1,k) C(n+1,k+1) x^k / (n+1)."""
    _check_nonneg(n=n)
    return Poly(Fraction(binom(n + 1, k) * binom(n + 1, k + 1), n + 1) for k in range(n + 1))


def narayana_b(n: int) -> Poly:
    """Type-B Narayana polynomial sum_k C(n,k)^2 x^k."""
    _check_nonneg(n=n)
    return Poly(binom(n, k) ** 2 for k in range(n + 1))


def narayana_d(n: int) -> Poly:
    """Type-D Narayana polynomial N_B(n) - n x N_A(n-2), defined for n >= 2."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"narayana_d needs n >= 2, got {n!r}")
    return narayana_b(n) - Poly((0, n)) * narayana_a(n - 2)


def narayana_rect(n: int, m: int) -> Poly:
    """N_{n,m}(x) = sum_{k=0}^n (C(n,k)C(m,k) - C(n,k+1)C(m,k-1)) x^k."""
    _check_nonneg(n=n, m=m)
    return Poly(
        binom(n, k) * binom(m, k) - binom(n, k + 1) * binom(m, k - 1)
        for k in range(n + 1)
    )


def overline_n(t: int, n: int) -> Poly:
    """N_{n+t, n}(x)."""
    _check_nonneg(t=t, n=n)
    return narayana_rect(n + t, n)


def underline_n(t: int, n: int) -> Poly:
    """N_{n, n+t}(x)."""
    _check_nonneg(t=t, n=n)
    return narayana_rect(n, n + t)


def _check_f_index(n) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"the F family is defined for n >= 2, got {n!r}")


def f_family(n: int, a: Scalar, b: Scalar) -> Poly:
    """a * N_B(n) + b * n x N_A(n-2) at concrete rational (a, b).

    No sign conditions are imposed on (a, b).
    """
    _check_f_index(n)
    a, b = as_fraction(a), as_fraction(b)
    return narayana_b(n) * a + Poly((0, n)) * narayana_a(n - 2) * b


def f_family_symbolic(n: int) -> ParamPoly:
    """F_n with symbolic (alpha, beta), built from the closed coefficient formula.

    [x^k] = alpha C(n,k)^2 + beta n/(n-1) C(n-1,k-1) C(n-1,k).
    """
    _check_f_index(n)
    ratio = Fraction(n, n - 1)
    return ParamPoly(
        ALPHA * binom(n, k) ** 2 + BETA * (ratio * binom(n - 1, k - 1) * binom(n - 1, k))
        for k in range(n + 1)
    )


def t_coefficient(which: int, n: int) -> Bivar:
    """The linear forms T1..T5 in (alpha, beta) for index n."""
    forms = {
        1: (4 * n - 2, n),
        2: (4 * n - 1, n),
        3: (4 * n, n + 1),
        4: (6 * n, n + 1),
        5: (4 * n + 1, n + 1),
    }
    ca, cb = forms[which]
    return Bivar.linear(ca, cb)


FAMILIES = ("A", "B", "D", "rect", "overline", "underline", "F", "bm", "Q")


def build_family(family: str, n: int, m: int | None = None, t: int | None = None,
                 alpha: Scalar | None = None, beta: Scalar | None = None) -> Poly:
    """Dispatch a family tag plus parameters to the matching constructor."""
    from .logconcavity import boros_moll_poly, q_poly

    if family == "A":
        return narayana_a(n)
    if family == "B":
        return narayana_b(n)
    if family == "D":
        return narayana_d(n)
    if family == "rect":
        if m is None:
            raise ValueError("family rect needs m")
        return narayana_rect(n, m)
    if family in ("overline", "underline"):
        if t is None:
            raise ValueError(f"family {family} needs t")
        return overline_n(t, n) if family == "overline" else underline_n(t, n)
    if family == "F":
        if alpha is None or beta is None:
            raise ValueError("family F needs alpha and beta")
        return f_family(n, alpha, beta)
    if family == "bm":
        return boros_moll_poly(n)
    if family == "Q":
        return q_poly(n)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
