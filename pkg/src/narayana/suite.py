"""The acceptance battery: one function per criterion, each returning (passed, detail)."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

from .arith import ALPHA, BETA, Poly
from .families import f_family, narayana_a, narayana_d, narayana_rect, overline_n, underline_n
from .logconcavity import boros_moll_coeff, boros_moll_poly, k_fold_log_concave, l_operator, q_decomposition_check, q_poly
from .recurrences import check_f_recurrence, check_overline_recurrence, check_underline_recurrence
from .roots import count_real_roots, count_sign_changes, interlaces, is_real_rooted, isolate_real_roots, liu_wang_certificate_f, root_sign_counts


@dataclass(frozen=True)
class SuiteBounds:
    f_recur_n: int = 30
    rect_recur_t: int = 10
    rect_recur_n: int = 30
    f_grid_n: int = 15
    liu_wang_n: int = 10
    rect_rr: int = 20
    overline_t: int = 6
    overline_n: int = 15
    overline_chain_n: int = 10
    underline_t: int = 6
    underline_n: int = 15
    ident_n: int = 30
    bm_agree_n: int = 30
    bm_fold_n: int = 20
    random_l_count: int = 200
    q_rr_n: int = 10
    q_dec_n: int = 8
    sturm_count: int = 500

    def capped(self, max_n: int) -> SuiteBounds:
        """Quick mode: every n-like bound clipped to max_n."""
        clip = {k: min(v, max_n) for k, v in self.__dict__.items() if k.endswith("_n") or k == "rect_rr"}
        clip["liu_wang_n"] = max(3, min(self.liu_wang_n, max_n))
        clip["f_recur_n"] = max(2, clip["f_recur_n"])
        clip["q_rr_n"] = max(1, clip["q_rr_n"])
        clip["q_dec_n"] = max(1, clip["q_dec_n"])
        return replace(self, **clip)


F_GRID = [(a, b) for a in (Fraction(1), Fraction(2), Fraction(1, 2)) for b in (-a, -a / 2, Fraction(0), Fraction(1))]


def _fails(items) -> tuple[bool, str]:
    items = list(items)
    if items:
        return False, f"{len(items)} failing instance(s), first: {items[0]}"
    return True, "all instances pass"


def c1_f_recurrence(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    bad = [n for n in range(2, b.f_recur_n + 1) if not check_f_recurrence(n).verified]
    x1 = check_f_recurrence(2).lhs[1] * Fraction(1, 2)  # lhs is 6 T1 F_3
    expected = ALPHA * ALPHA * 162 + ALPHA * BETA * 108 + BETA * BETA * 18
    if x1 != expected:
        bad.append(f"n=2 hand check: x^1 of 3 T1 F3 is {x1}")
    ok, detail = _fails(bad)
    return ok, f"n=2..{b.f_recur_n}: {detail}"


def c2_rect_recurrences(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    bad = []
    for t in range(b.rect_recur_t + 1):
        for n in range(1, b.rect_recur_n + 1):
            if not check_overline_recurrence(t, n).verified:
                bad.append(("overline", t, n))
            if not check_underline_recurrence(t, n).verified:
                bad.append(("underline", t, n))
    ok, detail = _fails(bad)
    return ok, f"t=0..{b.rect_recur_t}, n=1..{b.rect_recur_n}: {detail}"


def c3_complex_pair(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    counter = is_real_rooted(f_family(4, 1, Fraction(-19, 10)))
    nd4 = is_real_rooted(f_family(4, 1, -1))
    ok = (not counter) and nd4
    return ok, f"F_4(1,-19/10) real_rooted={counter}; F_4(1,-1) real_rooted={nd4}"


def c4_f_family(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    bad = []
    for a, bb in F_GRID:
        for n in range(2, b.f_grid_n + 1):
            f, g = f_family(n, a, bb), f_family(n + 1, a, bb)
            if not is_real_rooted(f):
                bad.append(("not real-rooted", n, a, bb))
            elif not interlaces(f, g).interlaces:
                bad.append(("no interlacing", n, a, bb))
        for n in range(3, b.liu_wang_n + 1):
            rep = liu_wang_certificate_f(n, a, bb)
            if not rep.passed:
                bad.append(("certificate", n, a, bb, rep.failure))
    ok, detail = _fails(bad)
    return ok, f"12-point grid, n=2..{b.f_grid_n}, certificate n=3..{b.liu_wang_n}: {detail}"


def c5_rect_real_rooted(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    r = b.rect_rr
    bad = [(n, m) for n in range(r + 1) for m in range(r + 1) if not is_real_rooted(narayana_rect(n, m))]
    ok, detail = _fails(bad)
    return ok, f"{(r + 1) ** 2} instances: {detail}"


def c6_overline(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    bad = []
    for t in range(2, b.overline_t + 1):
        for n in range(b.overline_n + 1):
            p = overline_n(t, n)
            counts = root_sign_counts(p)
            if not (is_real_rooted(p) and p.degree == n + 1 and count_sign_changes(p) == 1
                    and counts == {"negative": n, "zero": 0, "positive": 1}):
                bad.append((t, n, counts))
    for t in (2, 3):
        for n in range(1, b.overline_chain_n + 1):
            if not interlaces(overline_n(t, n), overline_n(t, n + 1), hi=0).strict:
                bad.append(("negative chain", t, n))
    ok, detail = _fails(bad)
    return ok, f"t=2..{b.overline_t}, n=0..{b.overline_n}; chain t=2,3 n<={b.overline_chain_n}: {detail}"


def c7_underline(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    bad = []
    for t in range(b.underline_t + 1):
        for n in range(b.underline_n + 1):
            g, f = underline_n(t, n), underline_n(t, n + 1)
            if not (is_real_rooted(g) and interlaces(g, f).interlaces):
                bad.append((t, n))
    ok, detail = _fails(bad)
    return ok, f"t=0..{b.underline_t}, n=0..{b.underline_n}: {detail}"


def c8_identifications(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    bad = []
    for n in range(b.ident_n + 1):
        a = narayana_a(n)
        if narayana_rect(n, n) != a or narayana_rect(n + 1, n) != a:
            bad.append(("rect", n))
        if n >= 2 and f_family(n, 1, -1) != narayana_d(n):
            bad.append(("D", n))
    ok, detail = _fails(bad)
    return ok, f"n<={b.ident_n}: {detail}"


def c9_boros_moll(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    bad = []
    for n in range(b.bm_agree_n + 1):
        if list(boros_moll_poly(n).coeffs) != [boros_moll_coeff(n, k) for k in range(n + 1)]:
            bad.append(("dual formula", n))
    for n in range(b.bm_fold_n + 1):
        if not k_fold_log_concave(boros_moll_poly(n), 2).passed:
            bad.append(("2-fold", n))
    ok, detail = _fails(bad)
    return ok, f"agreement n<={b.bm_agree_n}, 2-fold n<={b.bm_fold_n}: {detail}"


def random_real_rooted_nonneg(rng: random.Random, max_degree: int = 10) -> Poly:
    deg = rng.randint(1, max_degree)
    roots = [-Fraction(rng.randint(1, 60), rng.randint(1, 25)) for _ in range(deg)]
    return Poly.from_roots(roots, lead=Fraction(rng.randint(1, 9), rng.randint(1, 9)))


def c10_l_preserves_real_roots(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = []
    for i in range(b.random_l_count):
        p = random_real_rooted_nonneg(rng)
        q = l_operator(p)
        if not (all(c >= 0 for c in q.coeffs) and is_real_rooted(q)):
            bad.append((i, p))
    ok, detail = _fails(bad)
    return ok, f"{b.random_l_count} random polynomials (seed {seed}): {detail}"


def c11_q_probe(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    bad = [("Q not real-rooted", n) for n in range(1, b.q_rr_n + 1) if not is_real_rooted(q_poly(n))]
    for n in range(1, b.q_dec_n + 1):
        rep = q_decomposition_check(n)
        if not rep.matches_expected:
            bad.append(("ratio", n, rep.ratio))
    ok, detail = _fails(bad)
    return ok, f"Q_n real-rooted n=1..{b.q_rr_n}; ratio 2^(4n) n=1..{b.q_dec_n}: {detail}"


def random_factored(rng: random.Random) -> tuple[Poly, list[tuple[Fraction, int]], bool]:
    """Product of distinct rational linear factors, maybe times an irreducible quadratic."""
    k = rng.randint(0, 6)
    roots: set[Fraction] = set()
    while len(roots) < k:
        roots.add(Fraction(rng.randint(-40, 40), rng.randint(1, 12)))
    spec = [(r, rng.choice((1, 1, 1, 2, 3))) for r in sorted(roots)]
    p = Poly.const(Fraction(rng.choice((-1, 1)) * rng.randint(1, 7), rng.randint(1, 5)))
    for r, m in spec:
        p = p * Poly((-r, 1)) ** m
    with_quad = k == 0 or rng.random() < 0.5
    if with_quad:
        # (x - c)^2 + d with d > 0 has no real roots
        c = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
        d = Fraction(rng.randint(1, 30), rng.randint(1, 30))
        p = p * Poly((c * c + d, -2 * c, 1))
    return p, spec, with_quad


def sturm_oracle_mismatch(p: Poly, spec: list[tuple[Fraction, int]]) -> str | None:
    if count_real_roots(p) != len(spec):
        return f"count {count_real_roots(p)} != {len(spec)}"
    iso = isolate_real_roots(p)
    if len(iso) != len(spec):
        return f"isolated {len(iso)} != {len(spec)}"
    for i, (entry, (r, m)) in enumerate(zip(iso, spec)):
        inside = entry.lo == r if entry.exact else entry.lo < r < entry.hi
        if not inside or entry.multiplicity != m:
            return f"root {i}: {r} (mult {m}) vs entry {entry}"
    for e1, e2 in zip(iso.roots, iso.roots[1:]):
        if e1.hi > e2.lo or (e1.exact and e2.exact and e1.lo == e2.lo):
            return "intervals overlap"
    return None


def c12_sturm_oracle(b: SuiteBounds, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed + 1)
    bad = []
    for i in range(b.sturm_count):
        p, spec, _ = random_factored(rng)
        msg = sturm_oracle_mismatch(p, spec)
        if msg:
            bad.append((i, msg))
    ok, detail = _fails(bad)
    return ok, f"{b.sturm_count} random factored polynomials (seed {seed}): {detail}"


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    severity: str
    run: Callable[[SuiteBounds, int], tuple[bool, str]]


CRITERIA = (
    Criterion(1, "F recurrence, symbolic in alpha and beta", "build", c1_f_recurrence),
    Criterion(2, "overline and underline recurrences", "build", c2_rect_recurrences),
    Criterion(3, "complex-pair counterexample F_4(1,-19/10) vs N_D4", "build", c3_complex_pair),
    Criterion(4, "F family real-rooted, interlacing, certificate", "build", c4_f_family),
    Criterion(5, "N_{n,m} real-rooted", "build", c5_rect_real_rooted),
    Criterion(6, "overline root signs and negative chain", "build", c6_overline),
    Criterion(7, "underline chain interlacing", "build", c7_underline),
    Criterion(8, "identification identities", "build", c8_identifications),
    Criterion(9, "Boros-Moll dual formula and 2-fold log-concavity", "build", c9_boros_moll),
    Criterion(10, "L preserves real-rootedness (random)", "build", c10_l_preserves_real_roots),
    Criterion(11, "Q_n real-rootedness and double-sum ratio", "conjecture-probe", c11_q_probe),
    Criterion(12, "Sturm oracle (random factored)", "build", c12_sturm_oracle),
)


def run_criterion(c: Criterion, bounds: SuiteBounds | None = None, seed: int = 0) -> dict:
    passed, detail = c.run(bounds or SuiteBounds(), seed)
    return {
        "kind": "suite",
        "criterion": c.number,
        "title": c.title,
        "severity": c.severity,
        "passed": passed,
        "ok": passed or c.severity == "conjecture-probe",
        "detail": detail,
    }
