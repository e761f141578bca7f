"""Exact polynomial arithmetic over the rationals.

Two polynomial types live here:

``Poly``
    dense univariate polynomial in x with ``Fraction`` coefficients; index k of
    ``coeffs`` holds the coefficient of x**k and the zero polynomial is the
    empty tuple.

``ParamPoly``
    univariate polynomial in x whose coefficients are ``Bivar`` values, sparse
    polynomials in two symbolic parameters alpha and beta.

All values are immutable. Scalars are ``fractions.Fraction``, which is always
kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, gcd as igcd
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 for k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to Fraction (no floats)."""
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def _strip(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    """Dense univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip(as_fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> Poly:
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-as_fraction(r), 1))
        return p

    # -- basic queries --------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((Fraction(other),))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    # -- ring operations ------------------------------------------------
    def __add__(self, other) -> Poly:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponent")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[1]

    def __call__(self, x0: Scalar) -> Fraction:
        return poly_eval(self, x0)

    # -- misc -----------------------------------------------------------
    def derivative(self) -> Poly:
        return poly_derivative(self)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly(c / lc for c in self.coeffs)

    def reversed(self) -> Poly:
        return Poly(reversed(self.coeffs))

    def integer_coeffs(self) -> list[int]:
        """Coefficients scaled by a positive rational to coprime integers."""
        return _primitive_ints(self.coeffs)


def _lift(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return NotImplemented


def _primitive_ints(coeffs: Iterable[Fraction]) -> list[int]:
    coeffs = list(coeffs)
    if not coeffs:
        return []
    den = reduce(lambda acc, c: acc * c.denominator // igcd(acc, c.denominator), coeffs, 1)
    ints = [int(c * den) for c in coeffs]
    g = reduce(igcd, ints, 0)
    return [v // g for v in ints]


# -- module-level operations ---------------------------------------------

def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_derivative(p: Poly) -> Poly:
    return Poly(k * c for k, c in enumerate(p.coeffs) if k > 0)


def poly_eval(p: Poly, x0: Scalar) -> Fraction:
    """Exact Horner evaluation."""
    x0 = as_fraction(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def poly_divmod(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Euclidean division over Q: p = q*d + r with deg r < deg d."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dd = d.degree
    if len(rem) - 1 < dd:
        return Poly(), p
    lc = d.lc
    quot = [Fraction(0)] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c / lc
        quot[i - dd] = f
        for j, dc in enumerate(d.coeffs):
            rem[i - dd + j] -= f * dc
    return Poly(quot), Poly(rem[:dd])


def exact_div(p: Poly, d: Poly) -> Poly:
    q, r = poly_divmod(p, d)
    if r:
        raise ArithmeticError(f"{d} does not divide {p}")
    return q


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low degree first)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [lb * c for c in a]
        for j, bc in enumerate(b):
            a[shift + j] -= la * bc
        while a and a[-1] == 0:
            a.pop()
    return a


def _int_primitive(a: list[int]) -> list[int]:
    g = reduce(igcd, a, 0)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd via the primitive pseudo-remainder sequence over Z."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    a = _int_primitive(p.integer_coeffs())
    b = _int_primitive(q.integer_coeffs())
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, (_int_primitive(r) if r else [])
    return Poly(a).monic()


def squarefree_part(p: Poly) -> Poly:
    """Monic p / gcd(p, p'): same roots as p, all simple."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return Poly.const(1)
    return exact_div(p, poly_gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = lc * prod f_i**i with monic squarefree coprime f_i.

    Only factors of positive degree are returned, as (factor, multiplicity).
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
        i += 1
    return out


# -- bivariate coefficients in (alpha, beta) -------------------------------

class Bivar:
    """Sparse polynomial sum c_ij * alpha**i * beta**j over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            c = as_fraction(c)
            if c != 0:
                clean[(int(key[0]), int(key[1]))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Bivar is immutable")

    @classmethod
    def const(cls, c: Scalar) -> Bivar:
        return cls({(0, 0): c})

    @classmethod
    def linear(cls, ca: Scalar, cb: Scalar, c0: Scalar = 0) -> Bivar:
        """ca*alpha + cb*beta + c0."""
        return cls({(1, 0): ca, (0, 1): cb, (0, 0): c0})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Bivar.const(other)
        if not isinstance(other, Bivar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> Bivar:
        if isinstance(other, (int, Fraction)):
            other = Bivar.const(other)
        if not isinstance(other, Bivar):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return Bivar(out)

    __radd__ = __add__

    def __neg__(self) -> Bivar:
        return Bivar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> Bivar:
        return self + (-other)

    def __rsub__(self, other) -> Bivar:
        return (-self) + other

    def __mul__(self, other) -> Bivar:
        if isinstance(other, (int, Fraction)):
            return Bivar({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, Bivar):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Bivar(out)

    __rmul__ = __mul__

    def evaluate(self, a: Scalar, b: Scalar) -> Fraction:
        a, b = as_fraction(a), as_fraction(b)
        return sum((c * a**i * b**j for (i, j), c in self.terms.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"Bivar({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("alpha" if i == 1 else f"alpha^{i}"),
                    "" if j == 0 else ("beta" if j == 1 else f"beta^{j}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


_BIVAR_ZERO = Bivar()


def _strip_bivar(coeffs: Iterable[Bivar]) -> tuple[Bivar, ...]:
    out = list(coeffs)
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


class ParamPoly:
    """Polynomial in x with coefficients in Q[alpha, beta]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Bivar | Scalar] = ()):
        coeffs = (c if isinstance(c, Bivar) else Bivar.const(c) for c in coeffs)
        object.__setattr__(self, "coeffs", _strip_bivar(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    @classmethod
    def from_poly(cls, p: Poly) -> ParamPoly:
        return cls(Bivar.const(c) for c in p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Bivar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _BIVAR_ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            other = ParamPoly.from_poly(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ParamPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            return other
        if isinstance(other, Poly):
            return ParamPoly.from_poly(other)
        if isinstance(other, Bivar):
            return ParamPoly((other,))
        if isinstance(other, (int, Fraction)):
            return ParamPoly((Bivar.const(other),))
        return NotImplemented

    def __add__(self, other) -> ParamPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return ParamPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> ParamPoly:
        return ParamPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> ParamPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> ParamPoly:
        return (-self) + other

    def __mul__(self, other) -> ParamPoly:
        if isinstance(other, (int, Fraction, Bivar)):
            return ParamPoly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ParamPoly()
        out = [_BIVAR_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return ParamPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> ParamPoly:
        return ParamPoly(c * k for k, c in enumerate(self.coeffs) if k > 0)

    def substitute(self, a: Scalar, b: Scalar) -> Poly:
        return param_substitute(self, a, b)


def param_substitute(p: ParamPoly, a: Scalar, b: Scalar) -> Poly:
    """Evaluate every coefficient at (alpha, beta) = (a, b)."""
    return Poly(c.evaluate(a, b) for c in p.coeffs)


ALPHA = Bivar({(1, 0): 1})
BETA = Bivar({(0, 1): 1})
