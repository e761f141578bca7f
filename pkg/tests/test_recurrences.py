import random
from dataclasses import replace
from fractions import Fraction

import pytest
import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from narayana import (
    Bivar,
    Poly,
    f_family,
    narayana_a,
    narayana_rect,
    param_substitute,
    underline_n,
)
from narayana.arith import exact_div
from narayana.recurrences import (
    RectCoefficients,
    TCoefficients,
    check_f_recurrence,
    check_instance,
    check_overline_recurrence,
    check_underline_recurrence,
    f_recurrence_sides,
    sweep_keys,
)

# Coefficient displays copied as plain text and parsed by sympy; a second
# transcription path independent of RectCoefficients.
OVERLINE_TEXT = {
    "a0": "-(2n+3)(n+t)(n+t+1)",
    "a1": "3t(t-2)(t+1)^2/2+t(t-2)(t^2+7t+5)n +3t(t-2)(t+2)n^2+2t(t-2)n^3",
    "a2": "t^2(t-1)(t+1)^2/2+(t-1)(2t^3+3t^2+t-3)n +(t-1)(3t^2+3t-5)n^2+2(t-1)^2n^3",
    "b0": "-n-1-t",
    "b1": "(t-1)^2n+(t-1)t^2/2+(t-1)^2",
    "c0": "-n-t",
    "c1": "(t-1)^2n+(t-1)t^2/2",
}
UNDERLINE_TEXT = {
    "a0": "-(2n^3+(2t+5)n^2+(2t+3)n)",
    "a1": "(2t(t+2)n^3+3t(t+2)^2n^2+(t(t+2)(t^2+5t+5))n +(t(t+1)(t+2)(t+3)/2))",
    "a2": "(t+1)((2t+2)n^3+(3t^2+9t+5)n^2+(2t+3)(t^2+3t+1)n +t(t+1)(t+2)(t+3)/2)",
    "b0": "-(n+1)",
    "b1": "(t+1)^2n+(t+1)(t^2+4t+2)/2",
    "c0": "-n",
    "c1": "(t+1)^2n+t(t+1)(t+2)/2",
}
_TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)
_T, _N = sympy.symbols("t n")


def parsed(table):
    return {k: parse_expr(v, local_dict={"t": _T, "n": _N}, transformations=_TRANSFORMS) for k, v in table.items()}


def as_fraction(v) -> Fraction:
    v = sympy.Rational(v)
    return Fraction(int(v.p), int(v.q))


# ---- F family ---------------------------------------------------------------

def test_f_n2_verified_with_hand_coefficient():
    r = check_f_recurrence(2)
    assert r.verified and r.residual.is_zero()
    # hand expansion: x^1 coefficient of 3 T1 F_3 with T1 = 6a + 2b and [x]F_3 = 9a + 3b
    x1 = r.lhs.coeffs[1] * Fraction(1, 2)
    assert x1 == Bivar({(2, 0): 162, (1, 1): 108, (0, 2): 18})


@pytest.mark.parametrize("n", range(3, 31))
def test_f_recurrence_verified(n):
    assert check_f_recurrence(n).verified


def test_f_spot_check_n3_at_one_one():
    # direct Fraction evaluation of both sides at several x, no ParamPoly involved
    n, a, b = 3, Fraction(1), Fraction(1)
    T1, T2, T3, T4, T5 = ((4 * n - 2) * a + n * b, (4 * n - 1) * a + n * b, 4 * n * a + (n + 1) * b,
                          6 * n * a + (n + 1) * b, (4 * n + 1) * a + (n + 1) * b)

    def F(m, x):
        return f_family(m, a, b)(x)

    def dF(m, x):
        return f_family(m, a, b).derivative()(x)

    for x in (Fraction(-3), Fraction(-1, 2), Fraction(0), Fraction(2, 7), Fraction(5)):
        lhs = n * (n + 1) * T1 * F(n + 1, x)
        rhs = ((2 * n * (n + 1) * T2 * x + 2 * n * (n - 1) * T5) * F(n, x)
               - n * (n - 2) * T3 * (x - 1) ** 2 * F(n - 1, x)
               - 2 * T4 * x * (x - 1) * dF(n, x))
        assert lhs == rhs


def test_f_mutation_t2():
    T = TCoefficients.for_n(3)
    bad = replace(T, T2=Bivar.linear(4 * 3, 3))
    r = check_f_recurrence(3, bad)
    assert not r.verified and not r.residual.is_zero()
    assert r.leading_residual_term() is not None


@pytest.mark.parametrize("n", [2, 5, 11])
def test_f_residual_vanishes_at_random_points(n):
    rng = random.Random(n)
    lhs, rhs = f_recurrence_sides(n)
    for _ in range(10):
        a = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        b = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        assert param_substitute(lhs, a, b) == param_substitute(rhs, a, b)
        assert param_substitute(lhs - rhs, a, b).is_zero()


def test_f_domain():
    with pytest.raises(ValueError):
        check_f_recurrence(1)


# ---- rectangular families ---------------------------------------------------

def test_overline_t2_n1_by_hand():
    c = RectCoefficients.overline(2, 1)
    assert c.a0 == -60
    assert narayana_rect(3, 1) == Poly([1, 0, -1]) and narayana_rect(2, 0) == Poly([1, -1])
    assert check_overline_recurrence(2, 1).verified


@pytest.mark.parametrize("t,n", [(t, n) for t in range(0, 11) for n in range(1, 31)])
def test_overline_verified(t, n):
    assert check_overline_recurrence(t, n).verified


@pytest.mark.parametrize("t,n", [(t, n) for t in range(0, 11) for n in range(1, 31)])
def test_underline_verified(t, n):
    assert check_underline_recurrence(t, n).verified


@pytest.mark.parametrize("n", range(1, 15))
def test_overline_t0_spot_values(n):
    # at t = 0 the family is N_A; the recurrence must hold at numeric points too
    c = RectCoefficients.overline(0, n)
    for x in (Fraction(-2), Fraction(1, 3), Fraction(4)):
        lhs = (n + 1) * (n + 3) * (c.c0 + c.c1 * x) * narayana_a(n + 1)(x)
        rhs = ((c.a0 + c.a1 * x + c.a2 * x * x) * narayana_a(n)(x)
               - n * n * (x - 1) ** 2 * (c.b0 + c.b1 * x) * narayana_a(n - 1)(x))
        assert lhs == rhs


def test_underline_t1_n1_predicts_n23():
    c = RectCoefficients.underline(1, 1)
    t, n = 1, 1
    assert underline_n(1, 0) == Poly([1]) and underline_n(1, 1) == Poly([1, 2])
    rhs = (Poly((c.a0, c.a1, c.a2)) * underline_n(t, n)
           - Poly((1, -1)) ** 2 * Poly((c.b0, c.b1)) * underline_n(t, n - 1) * (n * (n + t)))
    predicted = exact_div(rhs, Poly((c.c0, c.c1)) * ((n + t + 3) * (n + 1)))
    # k=1 term of N_{2,3}: C(2,1)C(3,1) - C(2,2)C(3,0) = 5
    assert predicted == narayana_rect(2, 3) == Poly([1, 5, 3])


def test_overline_mutation_b1():
    c = RectCoefficients.overline(3, 4)
    assert not check_overline_recurrence(3, 4, replace(c, b1=-c.b1)).verified


def test_underline_mutation_c0():
    c = RectCoefficients.underline(2, 3)
    assert c.c0 == -3
    assert not check_underline_recurrence(2, 3, replace(c, c0=Fraction(-4))).verified


@pytest.mark.parametrize("variant,table", [("overline", OVERLINE_TEXT), ("underline", UNDERLINE_TEXT)])
def test_rect_coefficients_independent_transcription(variant, table):
    exprs = parsed(table)
    for t in range(5):
        for n in range(1, 6):
            c = getattr(RectCoefficients, variant)(t, n)
            got = c.as_dict()
            for k, e in exprs.items():
                assert got[k] == as_fraction(e.subs({_T: t, _N: n})), (variant, t, n, k)


@pytest.mark.parametrize("scale", [Fraction(3), Fraction(-2, 5), Fraction(7, 11)])
def test_scale_invariance(scale):
    for r in (check_f_recurrence(4), check_overline_recurrence(3, 2), check_underline_recurrence(2, 5)):
        assert r.verified
        assert (r.lhs * scale - r.rhs * scale).is_zero()
    bad = check_overline_recurrence(3, 4, replace(RectCoefficients.overline(3, 4), b1=Fraction(0)))
    assert not (bad.lhs * scale - bad.rhs * scale).is_zero()


def test_rect_domain():
    for fn in (check_overline_recurrence, check_underline_recurrence):
        with pytest.raises(ValueError):
            fn(0, 0)
        with pytest.raises(ValueError):
            fn(-1, 2)


def test_sweep_keys():
    assert sweep_keys("f", max_n=4) == [(2,), (3,), (4,)]
    assert len(sweep_keys("overline")) == 11 * 30
    assert check_instance("underline", (1, 1)).verified
    with pytest.raises(ValueError):
        sweep_keys("nope")
