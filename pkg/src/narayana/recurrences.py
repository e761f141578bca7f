"""Exact per-instance verification of the three-term recurrences.

Each identity is checked in denominator-cleared form: both sides are built as
polynomials and the residual ``lhs - rhs`` must be identically zero. The
F-family identity is checked with alpha and beta symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .arith import Bivar, ParamPoly, Poly
from .families import f_family_symbolic, overline_n, t_coefficient, underline_n

X_MINUS_1_SQ = Poly((1, -2, 1))
X_TIMES_X_MINUS_1 = Poly((0, -1, 1))


@dataclass(frozen=True)
class TCoefficients:
    T1: Bivar
    T2: Bivar
    T3: Bivar
    T4: Bivar
    T5: Bivar

    @classmethod
    def for_n(cls, n: int) -> TCoefficients:
        return cls(*(t_coefficient(i, n) for i in range(1, 6)))


@dataclass(frozen=True)
class RectCoefficients:
    """Coefficients a0..c1 of the N_{n,m} recurrences at fixed (t, n)."""

    variant: str
    t: int
    n: int
    a0: Fraction
    a1: Fraction
    a2: Fraction
    b0: Fraction
    b1: Fraction
    c0: Fraction
    c1: Fraction

    @classmethod
    def overline(cls, t: int, n: int) -> RectCoefficients:
        h = Fraction(1, 2)
        a0 = -(2 * n + 3) * (n + t) * (n + t + 1)
        a1 = (3 * t * (t - 2) * (t + 1) ** 2 * h
              + t * (t - 2) * (t * t + 7 * t + 5) * n
              + 3 * t * (t - 2) * (t + 2) * n ** 2
              + 2 * t * (t - 2) * n ** 3)
        a2 = (t * t * (t - 1) * (t + 1) ** 2 * h
              + (t - 1) * (2 * t ** 3 + 3 * t * t + t - 3) * n
              + (t - 1) * (3 * t * t + 3 * t - 5) * n ** 2
              + 2 * (t - 1) ** 2 * n ** 3)
        b0 = -n - 1 - t
        b1 = (t - 1) ** 2 * n + (t - 1) * t * t * h + (t - 1) ** 2
        c0 = -n - t
        c1 = (t - 1) ** 2 * n + (t - 1) * t * t * h
        return cls("overline", t, n, *map(Fraction, (a0, a1, a2, b0, b1, c0, c1)))

    @classmethod
    def underline(cls, t: int, n: int) -> RectCoefficients:
        h = Fraction(1, 2)
        a0 = -(2 * n ** 3 + (2 * t + 5) * n ** 2 + (2 * t + 3) * n)
        a1 = (2 * t * (t + 2) * n ** 3
              + 3 * t * (t + 2) ** 2 * n ** 2
              + t * (t + 2) * (t * t + 5 * t + 5) * n
              + t * (t + 1) * (t + 2) * (t + 3) * h)
        a2 = (t + 1) * ((2 * t + 2) * n ** 3
                        + (3 * t * t + 9 * t + 5) * n ** 2
                        + (2 * t + 3) * (t * t + 3 * t + 1) * n
                        + t * (t + 1) * (t + 2) * (t + 3) * h)
        b0 = -(n + 1)
        b1 = (t + 1) ** 2 * n + (t + 1) * (t * t + 4 * t + 2) * h
        c0 = -n
        c1 = (t + 1) ** 2 * n + t * (t + 1) * (t + 2) * h
        return cls("underline", t, n, *map(Fraction, (a0, a1, a2, b0, b1, c0, c1)))

    def as_dict(self) -> dict[str, Fraction]:
        return {k: getattr(self, k) for k in ("a0", "a1", "a2", "b0", "b1", "c0", "c1")}


@dataclass(frozen=True)
class RecurrenceCheckResult:
    identity: str
    params: dict
    lhs: Union[Poly, ParamPoly] = field(repr=False)
    rhs: Union[Poly, ParamPoly] = field(repr=False)

    @property
    def residual(self) -> Union[Poly, ParamPoly]:
        return self.lhs - self.rhs

    @property
    def verified(self) -> bool:
        return self.residual.is_zero()

    def leading_residual_term(self) -> str | None:
        """Human-readable top term of a nonzero residual, else None."""
        r = self.residual
        if r.is_zero():
            return None
        return f"({r.coeffs[-1]})*x^{r.degree}"


def f_recurrence_sides(n: int, coeffs: TCoefficients | None = None) -> tuple[ParamPoly, ParamPoly]:
    """Both sides of n(n+1)T1 F_{n+1} = (2n(n+1)T2 x + 2n(n-1)T5) F_n
    - n(n-2)T3 (x-1)^2 F_{n-1} - 2T4 x(x-1) F_n'."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"the F recurrence needs n >= 2, got {n!r}")
    T = coeffs or TCoefficients.for_n(n)
    f_n = f_family_symbolic(n)
    f_next = f_family_symbolic(n + 1)

    lhs = f_next * (T.T1 * (n * (n + 1)))
    phi = ParamPoly((T.T5 * (2 * n * (n - 1)), T.T2 * (2 * n * (n + 1))))
    rhs = phi * f_n - (f_n.derivative() * X_TIMES_X_MINUS_1) * (T.T4 * 2)
    scale = n * (n - 2)
    if scale:
        rhs = rhs - (f_family_symbolic(n - 1) * X_MINUS_1_SQ) * (T.T3 * scale)
    return lhs, rhs


def check_f_recurrence(n: int, coeffs: TCoefficients | None = None) -> RecurrenceCheckResult:
    lhs, rhs = f_recurrence_sides(n, coeffs)
    return RecurrenceCheckResult("f", {"n": n}, lhs, rhs)


def _check_rect_domain(t, n) -> None:
    if not isinstance(t, int) or t < 0:
        raise ValueError(f"t must be a nonnegative integer, got {t!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")


def _rect_sides(family, lead: int, t: int, n: int, c: RectCoefficients) -> tuple[Poly, Poly]:
    quad = Poly((c.a0, c.a1, c.a2))
    lin_b = Poly((c.b0, c.b1))
    lin_c = Poly((c.c0, c.c1))
    lhs = lin_c * family(t, n + 1) * lead
    rhs = quad * family(t, n) - X_MINUS_1_SQ * lin_b * family(t, n - 1) * (n * (n + t))
    return lhs, rhs


def check_overline_recurrence(t: int, n: int, coeffs: RectCoefficients | None = None) -> RecurrenceCheckResult:
    """(n+t+1)(n+3)(c0+c1x) N^_{n+1} = (a0+a1x+a2x^2) N^_n - n(n+t)(x-1)^2(b0+b1x) N^_{n-1}."""
    _check_rect_domain(t, n)
    c = coeffs or RectCoefficients.overline(t, n)
    lhs, rhs = _rect_sides(overline_n, (n + t + 1) * (n + 3), t, n, c)
    return RecurrenceCheckResult("overline", {"t": t, "n": n}, lhs, rhs)


def check_underline_recurrence(t: int, n: int, coeffs: RectCoefficients | None = None) -> RecurrenceCheckResult:
    """(n+t+3)(n+1)(c0+c1x) N_{n+1} = (a0+a1x+a2x^2) N_n - n(n+t)(x-1)^2(b0+b1x) N_{n-1}."""
    _check_rect_domain(t, n)
    c = coeffs or RectCoefficients.underline(t, n)
    lhs, rhs = _rect_sides(underline_n, (n + t + 3) * (n + 1), t, n, c)
    return RecurrenceCheckResult("underline", {"t": t, "n": n}, lhs, rhs)


IDENTITIES = ("f", "overline", "underline")


def sweep_keys(identity: str, max_n: int = 30, max_t: int = 10) -> list[tuple[int, ...]]:
    """Instance keys of the default verification grid, in deterministic order."""
    if identity == "f":
        return [(n,) for n in range(2, max_n + 1)]
    if identity in ("overline", "underline"):
        return [(t, n) for t in range(max_t + 1) for n in range(1, max_n + 1)]
    raise ValueError(f"unknown identity {identity!r}")


def check_instance(identity: str, key: tuple[int, ...]) -> RecurrenceCheckResult:
    if identity == "f":
        return check_f_recurrence(*key)
    if identity == "overline":
        return check_overline_recurrence(*key)
    if identity == "underline":
        return check_underline_recurrence(*key)
    raise ValueError(f"unknown identity {identity!r}")
