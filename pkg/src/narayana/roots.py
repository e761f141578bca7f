"""Exact real-root analysis: Sturm chains, isolation, real-rootedness and interlacing.

Everything is rational. Sign queries on integer-coefficient polynomials are
done with a homogenized Horner scheme so that evaluating at p/q never builds
a Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .arith import Poly, Scalar, as_fraction, poly_gcd, squarefree_decomposition, squarefree_part
from .families import f_family, t_coefficient


class RootAnalysisError(ValueError):
    pass


class RootAtEndpointError(RootAnalysisError):
    """A finite counting endpoint is itself a root."""


class RefinementCapExceeded(RootAnalysisError):
    pass


def default_refine_cap(degree: int) -> int:
    return 10 * max(degree, 0) + 60


# -- integer sign kernels --------------------------------------------------

def _ints(p: Poly) -> list[int]:
    """Primitive integer coefficients with the sign of p preserved."""
    return p.integer_coeffs()


def _sign_at(c: list[int], x: Fraction) -> int:
    """sign(p(x)) for integer coefficients c (low degree first)."""
    if not c:
        return 0
    a, b = x.numerator, x.denominator
    acc = c[-1]
    bpow = 1
    for ci in reversed(c[:-1]):
        bpow *= b
        acc = acc * a + ci * bpow
    return (acc > 0) - (acc < 0)


def _sign_at_inf(c: list[int], direction: int) -> int:
    lead = (c[-1] > 0) - (c[-1] < 0)
    if direction < 0 and (len(c) - 1) % 2:
        return -lead
    return lead


def _variations(signs) -> int:
    v, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _int_neg_rem(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of -rem(a, b), reduced to primitive form."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    steps = 0
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [lb * v for v in a]
        for j, bv in enumerate(b):
            a[shift + j] -= la * bv
        a.pop()
        while a and a[-1] == 0:
            a.pop()
        steps += 1
    if not a:
        return []
    # a = lb**steps * rem(a, b); flip so the result is a positive multiple of -rem.
    if lb < 0 and steps % 2:
        a = [-v for v in a]
    g = 0
    for v in a:
        g = _gcd(g, v)
    return [-(v // g) for v in a]


def _gcd(x: int, y: int) -> int:
    x, y = abs(x), abs(y)
    while y:
        x, y = y, x % y
    return x


# -- Sturm chains ----------------------------------------------------------

@dataclass(frozen=True)
class SturmChain:
    """p, p', then negated remainders; stored as primitive integer lists."""

    ints: tuple[tuple[int, ...], ...]

    @property
    def polys(self) -> tuple[Poly, ...]:
        return tuple(Poly(c) for c in self.ints)

    def __len__(self) -> int:
        return len(self.ints)

    def variations_at(self, x: Scalar | None, direction: int = 1) -> int:
        """Sign variations at x; x=None means the infinity on side ``direction``."""
        if x is None:
            return _variations(_sign_at_inf(list(c), direction) for c in self.ints)
        x = as_fraction(x)
        return _variations(_sign_at(list(c), x) for c in self.ints)

    def count(self, lo: Scalar | None = None, hi: Scalar | None = None) -> int:
        """V(lo) - V(hi); None stands for -inf / +inf respectively."""
        return self.variations_at(lo, -1) - self.variations_at(hi, 1)


def sturm_chain(p: Poly) -> SturmChain:
    if p.is_zero():
        raise RootAnalysisError("the zero polynomial has no Sturm chain")
    chain = [_ints(p)]
    if p.degree > 0:
        chain.append(_ints(p.derivative()))
        while len(chain[-1]) > 1:
            r = _int_neg_rem(chain[-2], chain[-1])
            if not r:
                break
            chain.append(r)
    return SturmChain(tuple(tuple(c) for c in chain))


def count_real_roots(p: Poly, lo: Scalar | None = None, hi: Scalar | None = None) -> int:
    """Number of distinct real roots of p in (lo, hi]; None means an infinite end."""
    if p.is_zero():
        raise RootAnalysisError("cannot count roots of the zero polynomial")
    lo = None if lo is None else as_fraction(lo)
    hi = None if hi is None else as_fraction(hi)
    for name, end in (("lo", lo), ("hi", hi)):
        if end is not None and p(end) == 0:
            raise RootAtEndpointError(
                f"endpoint {name}={end} is a root of the polynomial; nudge the endpoint"
            )
    if lo is not None and hi is not None and lo >= hi:
        raise RootAnalysisError(f"empty interval ({lo}, {hi}]")
    return sturm_chain(p).count(lo, hi)


def cauchy_bound(p: Poly) -> Fraction:
    """1 + max |a_i / a_deg|; every complex root lies strictly inside."""
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def count_sign_changes(p: Poly) -> int:
    """Sign changes in the coefficient sequence, zeros skipped (Descartes)."""
    if p.is_zero():
        raise RootAnalysisError("sign changes of the zero polynomial")
    return _variations((c > 0) - (c < 0) for c in p.coeffs)


# -- isolation -------------------------------------------------------------

@dataclass(frozen=True)
class RootEntry:
    """One distinct real root: exact point when lo == hi, else inside open (lo, hi)."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_strings(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


@dataclass(frozen=True)
class RootIsolation:
    poly: Poly = field(repr=False)
    sqfree: Poly = field(repr=False)
    roots: tuple[RootEntry, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i: int) -> RootEntry:
        return self.roots[i]

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def refine(self, index: int) -> RootIsolation:
        roots = list(self.roots)
        roots[index] = refine_entry(self.sqfree, roots[index])
        return RootIsolation(self.poly, self.sqfree, tuple(roots))


def refine_entry(sqfree: Poly, entry: RootEntry, ints: list[int] | None = None) -> RootEntry:
    """Halve an isolating interval of a squarefree polynomial."""
    if entry.exact:
        return entry
    c = ints if ints is not None else _ints(sqfree)
    mid = (entry.lo + entry.hi) / 2
    sm = _sign_at(c, mid)
    if sm == 0:
        return RootEntry(mid, mid, entry.multiplicity)
    if sm == _sign_at(c, entry.lo):
        return RootEntry(mid, entry.hi, entry.multiplicity)
    return RootEntry(entry.lo, mid, entry.multiplicity)


def simplest_rational_between(lo: Fraction, hi: Fraction | None) -> Fraction:
    """Rational with the smallest denominator in the open interval (lo, hi).

    ``hi=None`` stands for +infinity.
    """
    if hi is not None and lo >= hi:
        raise ValueError("empty interval")
    if lo < 0 and (hi is None or hi > 0):
        return Fraction(0)
    if hi is not None and hi <= 0:
        return -simplest_rational_between(-hi, -lo)
    fl = floor(lo)
    if hi is None or fl + 1 < hi:
        return Fraction(fl + 1)
    # lo and hi share the integer part fl, hi <= fl + 1
    inner_hi = None if lo == fl else 1 / (lo - fl)
    return fl + 1 / simplest_rational_between(1 / (hi - fl), inner_hi)


def _nudge_inward(chain: SturmChain, c: list[int], end: Fraction, toward: Fraction) -> Fraction:
    """Move a root endpoint toward the interior so no other root is skipped."""
    step = (toward - end) / 3
    while True:
        e = end + step
        if _sign_at(c, e) != 0:
            # counts are over half-open (lo, hi]: the root at ``end`` is
            # included only when ``end`` is the upper end
            if e > end and chain.count(end, e) == 0:
                return e
            if e < end and chain.count(e, end) == 1:
                return e
        step /= 3


def _isolate_sqfree(s: Poly, lo: Fraction | None, hi: Fraction | None) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (lo == hi for exact roots) of squarefree s in an open window."""
    if s.degree <= 0:
        return []
    c = _ints(s)
    chain = sturm_chain(s)
    bound = cauchy_bound(s)
    L = -bound if lo is None or lo < -bound else lo
    H = bound if hi is None or hi > bound else hi
    if L >= H:
        return []
    if _sign_at(c, L) == 0:
        L = _nudge_inward(chain, c, L, H)
    if _sign_at(c, H) == 0:
        H = _nudge_inward(chain, c, H, L)
        if L >= H:
            return []

    out: list[tuple[Fraction, Fraction]] = []
    stack = [(L, H, chain.variations_at(L), chain.variations_at(H))]
    while stack:
        a, b, va, vb = stack.pop()
        k = va - vb
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if _sign_at(c, mid) == 0:
            out.append((mid, mid))
            w = (b - a) / 4
            while True:
                left, right = mid - w, mid + w
                if _sign_at(c, left) and _sign_at(c, right) and chain.count(left, right) == 1:
                    break
                w /= 3
            stack.append((a, left, va, chain.variations_at(left)))
            stack.append((right, b, chain.variations_at(right), vb))
        else:
            vm = chain.variations_at(mid)
            stack.append((a, mid, va, vm))
            stack.append((mid, b, vm, vb))
    out.sort(key=lambda ab: ab[0])
    return out


def _pin_rational(c: list[int], a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink (a, b) until it either yields an exact rational root or provably has none.

    A rational root p/q of a primitive integer polynomial has q | lc; once the
    interval is narrower than 1/lc**2 it holds at most one such rational, and
    that one is the simplest rational in the interval.
    """
    lead, const = abs(c[-1]), abs(c[0])
    limit = Fraction(1, lead * lead)
    sa = _sign_at(c, a)
    while b - a >= limit:
        mid = (a + b) / 2
        sm = _sign_at(c, mid)
        if sm == 0:
            return mid, mid
        if sm == sa:
            a, sa = mid, sm
        else:
            b = mid
    cand = simplest_rational_between(a, b)
    if lead % cand.denominator == 0 and (cand.numerator == 0 or const == 0 or const % abs(cand.numerator) == 0):
        if _sign_at(c, cand) == 0:
            return cand, cand
    return a, b


def isolate_real_roots(p: Poly, lo: Scalar | None = None, hi: Scalar | None = None,
                       exact_rationals: bool = True) -> RootIsolation:
    """Isolate the distinct real roots of p inside the open window (lo, hi).

    Roots come back sorted, each with its multiplicity in p. With
    ``exact_rationals`` every rational root is reported as an exact point;
    otherwise only those hit by a bisection midpoint are.
    """
    if p.is_zero():
        raise RootAnalysisError("cannot isolate roots of the zero polynomial")
    lo = None if lo is None else as_fraction(lo)
    hi = None if hi is None else as_fraction(hi)
    if p.degree == 0:
        return RootIsolation(p, Poly.const(1), ())
    s = squarefree_part(p)
    c = _ints(s)
    factors = [(f, m, _ints(f)) for f, m in squarefree_decomposition(p)]
    entries = []
    for a, b in _isolate_sqfree(s, lo, hi):
        if a != b and exact_rationals:
            a, b = _pin_rational(c, a, b)
        if a == b:
            mult = sum(m for _, m, fc in factors if _sign_at(fc, a) == 0)
        else:
            mult = sum(m for _, m, fc in factors if _sign_at(fc, a) != _sign_at(fc, b))
        entries.append(RootEntry(a, b, mult))
    return RootIsolation(p, s, tuple(entries))


def is_real_rooted(p: Poly) -> bool:
    """All complex roots real, checked factor by factor of the squarefree decomposition."""
    if p.is_zero():
        raise RootAnalysisError("real-rootedness of the zero polynomial is undefined")
    return all(sturm_chain(f).count() == f.degree for f, _ in squarefree_decomposition(p))


def root_sign_counts(p: Poly) -> dict[str, int]:
    """Real roots of p split by sign, counted with multiplicity."""
    iso = isolate_real_roots(p, exact_rationals=False)
    zero_is_root = iso.sqfree(0) == 0
    neg = pos = zero = 0
    for r in iso:
        if r.lo <= 0 <= r.hi and zero_is_root:
            zero += r.multiplicity
            continue
        entry = r
        while entry.lo < 0 < entry.hi:
            entry = refine_entry(iso.sqfree, entry)
        if entry.hi <= 0:
            neg += r.multiplicity
        else:
            pos += r.multiplicity
    return {"negative": neg, "zero": zero, "positive": pos}


# -- sign of a polynomial at an algebraic root ------------------------------

def sign_at_root(q: Poly, p: Poly, root: RootEntry, refine_cap: int | None = None) -> int:
    """Sign of q at the real root of p isolated by ``root``.

    A shared root is certified through gcd(squarefree(p), q); otherwise the
    interval is refined until q has constant sign on it.
    """
    if q.is_zero():
        return 0
    if root.exact:
        v = q(root.lo)
        return (v > 0) - (v < 0)
    s = squarefree_part(p)
    sc = _ints(s)
    g = poly_gcd(s, q)
    if g.degree > 0:
        gc = _ints(g)
        if _sign_at(gc, root.lo) != _sign_at(gc, root.hi):
            return 0
    qs = squarefree_part(q)
    qchain = sturm_chain(qs) if qs.degree > 0 else None
    qc = _ints(q)
    cap = default_refine_cap(p.degree) if refine_cap is None else refine_cap
    entry = root
    for _ in range(cap + 1):
        if entry.exact:
            v = _sign_at(qc, entry.lo)
            return v
        slo = _sign_at(qc, entry.lo)
        if slo != 0 and (qchain is None or qchain.count(entry.lo, entry.hi) == 0):
            return slo
        entry = refine_entry(s, entry, sc)
    raise RefinementCapExceeded(
        f"sign of q at the root in ({root.lo}, {root.hi}) unresolved after {cap} bisections"
    )


# -- interlacing -----------------------------------------------------------

STRICT = "StrictlyInterlaces"
WEAK = "Interlaces"
NOT_INTERLACING = "DoesNotInterlace"
NOT_REAL_ROOTED = "NotBothRealRooted"
RELATIONS = (STRICT, WEAK, NOT_INTERLACING, NOT_REAL_ROOTED)


@dataclass(frozen=True)
class InterlaceReport:
    relation: str
    witness: str | None = None

    @property
    def interlaces(self) -> bool:
        """Weak interlacing holds (strict implies weak)."""
        return self.relation in (STRICT, WEAK)

    @property
    def strict(self) -> bool:
        return self.relation == STRICT


def _joint_root_indices(f: Poly, g: Poly, lo, hi) -> tuple[list[int], list[int]]:
    """Roots of f and g (with multiplicity) as indices into their merged distinct roots.

    Equal indices mean equal roots; index order is root order.
    """
    u = squarefree_part(f * g)
    iso = _isolate_sqfree(u, lo, hi)
    fac_f = [(m, _ints(h)) for h, m in squarefree_decomposition(f)]
    fac_g = [(m, _ints(h)) for h, m in squarefree_decomposition(g)]

    def mult(facs, a, b):
        if a == b:
            return sum(m for m, hc in facs if _sign_at(hc, a) == 0)
        return sum(m for m, hc in facs if _sign_at(hc, a) != _sign_at(hc, b))

    rf, rg = [], []
    for idx, (a, b) in enumerate(iso):
        rf += [idx] * mult(fac_f, a, b)
        rg += [idx] * mult(fac_g, a, b)
    return rf, rg


def interlaces(g: Poly, f: Poly, lo: Scalar | None = None, hi: Scalar | None = None) -> InterlaceReport:
    """Decide whether g interlaces f: ... <= s2 <= r2 <= s1 <= r1.

    r are the zeros of f and s those of g. With a window (lo, hi) only the
    zeros inside it take part. Leading-coefficient signs are normalized first.
    """
    if f.is_zero() or g.is_zero():
        raise RootAnalysisError("interlacing needs nonzero polynomials")
    if f.lc < 0:
        f = -f
    if g.lc < 0:
        g = -g
    if not (is_real_rooted(f) and is_real_rooted(g)):
        bad = [name for name, p in (("f", f), ("g", g)) if not is_real_rooted(p)]
        return InterlaceReport(NOT_REAL_ROOTED, f"not real-rooted: {', '.join(bad)}")
    lo = None if lo is None else as_fraction(lo)
    hi = None if hi is None else as_fraction(hi)

    rf, rg = _joint_root_indices(f, g, lo, hi)
    m, k = len(rf), len(rg)
    if m - k not in (0, 1):
        return InterlaceReport(
            NOT_INTERLACING, f"root counts incompatible: f has {m}, g has {k} (need 0 or 1 more in f)"
        )
    r = rf[::-1]
    s = rg[::-1]
    strict = True
    for i in range(k):
        if r[i] < s[i]:
            return InterlaceReport(NOT_INTERLACING, f"s{i + 1} > r{i + 1}")
        if i + 1 < m and s[i] < r[i + 1]:
            return InterlaceReport(NOT_INTERLACING, f"r{i + 2} > s{i + 1}")
        if r[i] == s[i] or (i + 1 < m and s[i] == r[i + 1]):
            strict = False
    if k == 0:
        return InterlaceReport(WEAK, "vacuous: g has no zeros")
    return InterlaceReport(STRICT if strict else WEAK)


# -- Liu-Wang certificate for the F family ---------------------------------

@dataclass(frozen=True)
class LiuWangReport:
    n: int
    a: Fraction
    b: Fraction
    hypotheses_ok: bool
    degree_ok: bool
    f_real_rooted: bool
    g1_interlaces_f: bool
    g2_interlaces_f: bool
    lead_signs_ok: bool
    root_details: tuple[dict, ...]
    failure: str | None

    @property
    def passed(self) -> bool:
        return self.failure is None


def liu_wang_certificate_f(n: int, a: Scalar, b: Scalar, refine_cap: int | None = None) -> LiuWangReport:
    """Check the interlacing criterion that carries F_n to F_{n+1} at concrete (a, b).

    f = F_n, F = F_{n+1}, g1 = F_{n-1}, g2 = F_n', with
    phi1 = -(n-2) T3 (x-1)^2 / ((n+1) T1) and phi2 = -2 T4 x(x-1) / (n(n+1) T1).
    Hypothesis violations (a <= 0 or a + b < 0) are reported, not raised.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"the certificate needs n >= 3, got {n!r}")
    a, b = as_fraction(a), as_fraction(b)
    hyp = a > 0 and a + b >= 0
    f = f_family(n, a, b)
    F = f_family(n + 1, a, b)
    g1 = f_family(n - 1, a, b)
    g2 = f.derivative()
    T1, T3, T4 = (t_coefficient(i, n).evaluate(a, b) for i in (1, 3, 4))

    failure = None if hyp else f"hypotheses violated: need a > 0 and a + b >= 0, got a={a}, b={b}"
    degree_ok = not f.is_zero() and F.degree == f.degree + 1
    if failure is None and not degree_ok:
        failure = f"deg F_{n + 1} = {F.degree} is not deg F_{n} + 1 = {f.degree + 1}"

    f_rr = not f.is_zero() and is_real_rooted(f)
    if failure is None and not f_rr:
        failure = f"F_{n} is not real-rooted"

    g1_ok = f_rr and not g1.is_zero() and interlaces(g1, f).interlaces
    g2_ok = f_rr and not g2.is_zero() and interlaces(g2, f).interlaces
    if failure is None and not (g1_ok and g2_ok):
        failure = "g1 = F_{n-1} or g2 = F_n' does not interlace F_n"

    lead_ok = not F.is_zero() and all(
        not g.is_zero() and (g.lc > 0) == (F.lc > 0) for g in (g1, g2)
    )
    if failure is None and not lead_ok:
        failure = "leading coefficients of F and g_j differ in sign"

    details = []
    if f_rr and T1 != 0:
        den = (n + 1) * T1
        phi1_num = Poly((1, -2, 1)) * (-(n - 2) * T3)
        phi2_num = Poly((0, -1, 1)) * (-2 * T4)
        den_sign = 1 if den > 0 else -1
        iso = isolate_real_roots(f)
        for entry in iso:
            s1 = sign_at_root(phi1_num, f, entry, refine_cap) * den_sign
            s2 = sign_at_root(phi2_num, f, entry, refine_cap) * den_sign
            details.append({"interval": entry.to_strings(), "multiplicity": entry.multiplicity,
                            "phi1_sign": s1, "phi2_sign": s2})
            if failure is None and (s1 > 0 or s2 > 0):
                failure = f"phi_j > 0 at the root in ({entry.lo}, {entry.hi})"
    elif failure is None and T1 == 0:
        failure = "T1 vanishes; phi_j undefined"

    return LiuWangReport(n, a, b, hyp, degree_ok, f_rr, g1_ok, g2_ok, lead_ok, tuple(details), failure)
