from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from narayana import (
    Poly,
    f_family,
    narayana_a,
    narayana_rect,
    overline_n,
    underline_n,
)
from narayana.roots import (
    NOT_INTERLACING,
    NOT_REAL_ROOTED,
    STRICT,
    WEAK,
    RefinementCapExceeded,
    RootAnalysisError,
    RootAtEndpointError,
    RootEntry,
    cauchy_bound,
    count_real_roots,
    count_sign_changes,
    interlaces,
    is_real_rooted,
    isolate_real_roots,
    liu_wang_certificate_f,
    root_sign_counts,
    sign_at_root,
    simplest_rational_between,
    sturm_chain,
)

X = Poly.x()
small_q = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def contains(entry: RootEntry, r: Fraction) -> bool:
    return entry.lo == entry.hi == r if entry.exact else entry.lo < r < entry.hi


# ---- examples ---------------------------------------------------------------

def test_sturm_examples():
    assert sturm_chain(X**2 - 1).count() == 2
    assert sturm_chain(X**2 + 1).count() == 0
    p = Poly([1, 3, 1])
    assert p(-3) == 1 and p(-2) == -1 and p(0) == 1
    assert sturm_chain(p).count() == 2 and count_real_roots(p, -3, 0) == 2
    with pytest.raises(RootAnalysisError):
        sturm_chain(Poly())


def test_count_real_roots_examples():
    assert count_real_roots(X**2 - 1, 0, 2) == 1
    assert count_real_roots(Poly([1, 0, -1]), 0, None) == 1
    assert count_real_roots(Poly([1, 1, 1])) == 0
    with pytest.raises(RootAtEndpointError):
        count_real_roots(X**2 - 1, 1, 2)
    with pytest.raises(RootAtEndpointError):
        count_real_roots(X**2 - 1, 0, 1)


def test_isolation_examples():
    iso = isolate_real_roots(Poly([1, -2, 1]))
    assert len(iso) == 1 and iso[0].exact and iso[0].lo == 1 and iso[0].multiplicity == 2

    iso = isolate_real_roots(Poly([1, 3, 1]))
    assert len(iso) == 2
    assert -3 <= iso[0].lo and iso[0].hi <= -2
    assert -1 <= iso[1].lo and iso[1].hi <= 0

    iso = isolate_real_roots(X**3)
    assert len(iso) == 1 and iso[0].exact and iso[0].lo == 0 and iso[0].multiplicity == 3


def test_is_real_rooted_examples():
    assert not is_real_rooted(f_family(4, 1, Fraction(-19, 10)))
    assert is_real_rooted(narayana_rect(3, 1))
    assert not is_real_rooted(X**2 + 1)
    assert is_real_rooted(Poly([5]))


def test_sign_changes_examples():
    assert count_sign_changes(Poly([1, 0, -1])) == 1
    assert count_sign_changes(Poly([1, 3, 1])) == 0
    assert count_sign_changes(overline_n(3, 2)) == 1


def test_interlace_examples():
    r = interlaces(underline_n(1, 0), underline_n(1, 1))
    assert r.relation == WEAK and r.interlaces
    assert interlaces(narayana_a(2), narayana_a(3)).relation == STRICT


def test_interlace_shared_root_example():
    # g = (x+1)(x+3), f = (x+1)(x+2): ordering -3 <= -2 <= -1 <= -1 holds weakly,
    # so g interlaces f with a shared root; the reversed pair fails.
    g = Poly.from_roots([-1, -3])
    f = Poly.from_roots([-1, -2])
    assert interlaces(g, f).relation == WEAK
    assert interlaces(f, g).relation == NOT_INTERLACING


def test_interlace_not_real_rooted():
    r = interlaces(narayana_a(2), X**2 + 1)
    assert r.relation == NOT_REAL_ROOTED and not r.interlaces


def test_interlace_degree_mismatch():
    assert interlaces(narayana_a(3), narayana_a(7)).relation == NOT_INTERLACING


def test_interlace_normalizes_negative_leads():
    f, g = overline_n(2, 3), overline_n(2, 2)
    assert f.lc < 0 and g.lc < 0
    assert interlaces(-g, f).relation == interlaces(g, -f).relation


def test_sign_at_root_examples():
    p = X**2 - 2
    pos = [e for e in isolate_real_roots(p) if e.lo >= 0][0]
    assert sign_at_root(X, p, pos) == 1
    p = narayana_a(3)
    for e in isolate_real_roots(p):
        assert sign_at_root((X - 1) ** 2, p, e) == 1
    p = Poly.from_roots([-1, -2])
    root = RootEntry(Fraction(-3, 2), Fraction(0), 1)
    assert sign_at_root(X + 1, p, root) == 0


def test_sign_at_root_irrational_shared():
    p = (X**2 - 2) * (X + 5)
    e = [e for e in isolate_real_roots(p) if e.lo > 0][0]
    assert not e.exact
    assert sign_at_root(X**2 - 2, p, e) == 0
    assert sign_at_root(X**2 - 3, p, e) == -1


def test_sign_at_root_cap():
    # q's root sits within 1e-6 of sqrt(2), so a cap of 2 bisections cannot separate them
    p = X**2 - 2
    e = [e for e in isolate_real_roots(p) if e.lo > 0][0]
    q = X - Fraction(1414214, 1000000)
    with pytest.raises(RefinementCapExceeded):
        sign_at_root(q, p, e, refine_cap=2)
    assert sign_at_root(q, p, e) == -1


def test_liu_wang_examples():
    assert liu_wang_certificate_f(3, 1, -1).passed
    assert liu_wang_certificate_f(3, 1, 0).passed
    r = liu_wang_certificate_f(4, 1, Fraction(-19, 10))
    assert not r.passed and not r.hypotheses_ok
    assert "hypotheses" in r.failure
    with pytest.raises(ValueError):
        liu_wang_certificate_f(2, 1, 0)


@pytest.mark.parametrize("n", range(3, 11))
@pytest.mark.parametrize("a,b", [(1, -1), (1, 0), (2, 1), (Fraction(1, 2), Fraction(-1, 4))])
def test_liu_wang_passes_on_grid(n, a, b):
    r = liu_wang_certificate_f(n, a, b)
    assert r.passed, r.failure
    assert all(d["phi1_sign"] <= 0 and d["phi2_sign"] <= 0 for d in r.root_details)


def test_root_sign_counts():
    assert root_sign_counts(Poly([1, 0, -1])) == {"negative": 1, "zero": 0, "positive": 1}
    assert root_sign_counts(X**3 * (X + 2) ** 2) == {"negative": 2, "zero": 3, "positive": 0}
    assert root_sign_counts(X**2 + 1) == {"negative": 0, "zero": 0, "positive": 0}


def test_simplest_rational():
    assert simplest_rational_between(Fraction(1, 3), Fraction(2, 3)) == Fraction(1, 2)
    assert simplest_rational_between(Fraction(-5, 2), Fraction(-1, 2)) in (-1, -2)
    assert simplest_rational_between(Fraction(5, 2), None) == 3


def test_cauchy_bound_contains_roots():
    p = Poly.from_roots([-7, Fraction(1, 3), 4])
    b = cauchy_bound(p)
    assert all(-b < e.lo and e.hi < b for e in isolate_real_roots(p))


# ---- properties -------------------------------------------------------------

@st.composite
def factored(draw):
    roots = draw(st.lists(small_q, min_size=0, max_size=6, unique=True))
    mults = [draw(st.integers(1, 3)) for _ in roots]
    lead = draw(st.sampled_from([1, -2, Fraction(3, 4)]))
    p = Poly([lead])
    for r, m in zip(roots, mults):
        p = p * Poly.from_roots([r]) ** m
    quad = draw(st.booleans())
    if quad:
        # (x - u)^2 + v with v > 0 has no real roots
        u, v = draw(small_q), draw(st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5))
        p = p * ((X - u) ** 2 + v)
    return p, dict(zip(roots, mults)), quad


@settings(max_examples=150, deadline=None)
@given(factored())
def test_sturm_oracle(data):
    p, mult, quad = data
    if p.degree == 0:
        return
    assert count_real_roots(p) == len(mult)
    iso = isolate_real_roots(p)
    assert len(iso) == len(mult)
    for r, m in mult.items():
        hit = [e for e in iso if contains(e, r)]
        assert len(hit) == 1 and hit[0].multiplicity == m
    assert iso.total_multiplicity == sum(mult.values())
    assert is_real_rooted(p) == (not quad)
    assert [e.lo for e in iso] == sorted(e.lo for e in iso)


@settings(max_examples=100, deadline=None)
@given(st.lists(small_q, min_size=1, max_size=4), st.lists(small_q, min_size=1, max_size=4),
       st.integers(0, 1), st.integers(0, 1))
def test_real_rooted_product(rp, rq, bump_p, bump_q):
    p = Poly.from_roots(rp) * (X**2 + 1 if bump_p else Poly([1]))
    q = Poly.from_roots(rq) * (X**2 + 3 if bump_q else Poly([1]))
    assert is_real_rooted(p * q) == (is_real_rooted(p) and is_real_rooted(q))


@settings(max_examples=100, deadline=None)
@given(st.lists(small_q, min_size=1, max_size=5, unique=True))
def test_interlace_reflexive(roots):
    p = Poly.from_roots(roots)
    assert interlaces(p, p).relation == WEAK


@settings(max_examples=100, deadline=None)
@given(st.lists(small_q, min_size=2, max_size=6, unique=True))
def test_interlace_antisymmetry(pts):
    # alternate the sorted points between f and g: g strictly interlaces f, not vice versa
    pts = sorted(pts, reverse=True)
    f_roots, g_roots = pts[0::2], pts[1::2]
    f, g = Poly.from_roots(f_roots), Poly.from_roots(g_roots)
    assert interlaces(g, f).relation == STRICT
    assert interlaces(f, g).relation == NOT_INTERLACING


@settings(max_examples=60, deadline=None)
@given(st.lists(small_q, min_size=1, max_size=5, unique=True), small_q)
def test_sign_at_root_matches_exact_value(roots, c):
    p = Poly.from_roots(roots) * (X**2 - 2)
    q = X - c
    for e in isolate_real_roots(p):
        s = sign_at_root(q, p, e)
        if e.exact:
            v = q(e.lo)
            assert s == (v > 0) - (v < 0)
        elif e.lo >= 0:
            # root sqrt(2): sqrt(2) > c iff c < 0 or c^2 < 2
            assert s == (1 if c < 0 or c * c < 2 else -1)
        else:
            # root -sqrt(2): -sqrt(2) > c iff c < 0 and c^2 > 2
            assert s == (1 if c < 0 and c * c > 2 else -1)


@pytest.mark.parametrize("t", range(2, 7))
@pytest.mark.parametrize("n", range(0, 16))
def test_overline_one_positive_root(t, n):
    p = overline_n(t, n)
    assert p.degree == n + 1 and is_real_rooted(p)
    assert root_sign_counts(p) == {"negative": n, "zero": 0, "positive": 1}


@pytest.mark.parametrize("t", [2, 3])
@pytest.mark.parametrize("n", range(1, 11))
def test_overline_negative_chain(t, n):
    assert interlaces(overline_n(t, n), overline_n(t, n + 1), hi=0).relation == STRICT


@pytest.mark.parametrize("t", range(0, 7))
@pytest.mark.parametrize("n", range(0, 16))
def test_underline_chain(t, n):
    assert is_real_rooted(underline_n(t, n))
    assert interlaces(underline_n(t, n), underline_n(t, n + 1)).interlaces
