"""Command-line front end: ``narayana {gen,roots,interlace,recur,logconcave,suite}``.

Every command assembles a ``ReportDocument``; the exit code is 0 iff every
record reports ok, 1 otherwise, and 2 for invalid arguments.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence

from .arith import as_fraction
from .families import FAMILIES, build_family
from .logconcavity import DEFAULT_FOLDS, certify_infinite_logconcavity, k_fold_log_concave, q_decomposition_check, q_poly
from .recurrences import IDENTITIES, check_instance, sweep_keys
from .report import ReportDocument
from .roots import count_sign_changes, interlaces, is_real_rooted, isolate_real_roots, liu_wang_certificate_f, root_sign_counts
from .suite import CRITERIA, SuiteBounds, run_criterion

JOBS_ENV = "NARAYANA_JOBS"
MIN_INDEX = {"A": 0, "B": 0, "D": 2, "rect": 0, "overline": 0, "underline": 0, "F": 2, "bm": 0, "Q": 1}


class UsageError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r} (use 'p/q' or an integer)")


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# -- family specs ------------------------------------------------------------

def family_spec(family: str, n: int, m=None, t=None, alpha=None, beta=None) -> tuple:
    return (family, n, m, t, alpha, beta)


def spec_params(spec: tuple) -> dict[str, str]:
    family, n, m, t, alpha, beta = spec
    params = {"n": str(n)}
    if family == "rect":
        params["m"] = str(m)
    if family in ("overline", "underline"):
        params["t"] = str(t)
    if family == "F":
        params["alpha"] = str(alpha)
        params["beta"] = str(beta)
    return params


def spec_label(spec: tuple) -> str:
    return f"{spec[0]}({', '.join(f'{k}={v}' for k, v in spec_params(spec).items())})"


def build(spec: tuple):
    return build_family(*spec)


# -- per-instance workers (module level so they pickle) -----------------------

def gen_record(spec: tuple) -> dict:
    p = build(spec)
    return {"kind": "gen", "ok": True, "family": spec[0], "params": spec_params(spec),
            "coefficients": [str(c) for c in p.coeffs], "degree": p.degree}


def roots_record(spec: tuple) -> dict:
    p = build(spec)
    rec = {"kind": "roots", "ok": True, "family": spec[0], "params": spec_params(spec),
           "coefficients": [str(c) for c in p.coeffs], "degree": p.degree}
    if p.is_zero():
        rec.update(real_rooted=None, intervals=[])
        return rec
    counts = root_sign_counts(p)
    iso = isolate_real_roots(p)
    rec.update(
        real_rooted=is_real_rooted(p),
        negative_roots=counts["negative"],
        zero_roots=counts["zero"],
        positive_roots=counts["positive"],
        distinct_real_roots=len(iso),
        sign_changes=count_sign_changes(p),
        intervals=[{"lo": str(e.lo), "hi": str(e.hi), "multiplicity": e.multiplicity} for e in iso],
    )
    return rec


def interlace_record(task: tuple) -> dict:
    g_spec, f_spec, certificate, refine_cap = task
    rep = interlaces(build(g_spec), build(f_spec))
    rec = {"kind": "interlace", "ok": rep.interlaces, "g": spec_label(g_spec), "f": spec_label(f_spec),
           "relation": rep.relation, "witness": rep.witness}
    if certificate:
        family, n, _, _, alpha, beta = g_spec
        if family != "F" or n < 3:
            rec["certificate"] = None
        else:
            lw = liu_wang_certificate_f(n, alpha, beta, refine_cap)
            rec["certificate"] = {"passed": lw.passed, "failure": lw.failure, "roots": list(lw.root_details)}
            rec["ok"] = rec["ok"] and lw.passed
    return rec


def recur_record(task: tuple) -> dict:
    identity, key = task
    res = check_instance(identity, key)
    return {"kind": "recur", "ok": res.verified, "identity": identity,
            "params": {k: str(v) for k, v in res.params.items()},
            "verified": res.verified, "residual_leading_term": res.leading_residual_term()}


def logconcave_record(task: tuple) -> dict:
    mode, spec, folds = task
    if mode == "q-real-rooted":
        n = spec
        rr = is_real_rooted(q_poly(n))
        return {"kind": "logconcave", "ok": rr, "family": "Q", "params": {"n": str(n)},
                "mode": mode, "real_rooted": rr, "severity": "conjecture-probe"}
    if mode == "q-decompose":
        n = spec
        rep = q_decomposition_check(n)
        return {"kind": "logconcave", "ok": rep.matches_expected, "family": "Q", "params": {"n": str(n)},
                "mode": mode, "ratio": None if rep.ratio is None else str(rep.ratio),
                "expected_ratio": str(rep.expected_ratio), "severity": "conjecture-probe"}
    p = build(spec)
    label = spec_label(spec)
    rep = certify_infinite_logconcavity(p, folds, label) if mode == "certify" else k_fold_log_concave(p, folds, label)
    return {"kind": "logconcave", "ok": rep.passed, "family": spec[0], "params": spec_params(spec),
            "mode": mode, "certificate": rep.certificate, "max_verified_fold": rep.max_verified_fold,
            "first_failure": None if rep.first_failure is None else list(rep.first_failure),
            "folds_requested": rep.folds_requested}


def suite_record(task: tuple) -> dict:
    number, bounds, seed = task
    crit = next(c for c in CRITERIA if c.number == number)
    return run_criterion(crit, bounds, seed)


def run_tasks(fn: Callable[[tuple], dict], tasks: list, jobs: int) -> list[dict]:
    """Evaluate independent tasks; results come back in task order regardless of jobs."""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


# -- commands ------------------------------------------------------------------

def _index_range(args, family: str) -> range:
    start = MIN_INDEX[family] if args.n is None else args.n
    stop = start if args.max_n is None else args.max_n
    if stop < start:
        raise UsageError(f"--max-n {stop} is below the start index {start}")
    return range(start, stop + 1)


def _spec_from(args, family: str, n: int, suffix: str = "") -> tuple:
    m = getattr(args, "m" + suffix)
    t = getattr(args, "t" + suffix)
    alpha = getattr(args, "alpha" + suffix)
    beta = getattr(args, "beta" + suffix)
    spec = family_spec(family, n, m, t, alpha, beta)
    build(spec)  # surface domain errors before any sweep starts
    return spec


def _need_family(args) -> str:
    if args.family is None:
        raise UsageError("--family is required for this command")
    return args.family


def cmd_gen(args) -> list[dict]:
    family = _need_family(args)
    specs = [_spec_from(args, family, n) for n in _index_range(args, family)]
    return run_tasks(gen_record, specs, args.jobs)


def cmd_roots(args) -> list[dict]:
    family = _need_family(args)
    specs = [_spec_from(args, family, n) for n in _index_range(args, family)]
    return run_tasks(roots_record, specs, args.jobs)


def cmd_interlace(args) -> list[dict]:
    family = _need_family(args)
    if args.n2 is not None or args.family2 is not None:
        family2 = args.family2 or family
        for name in ("m", "t", "alpha", "beta"):
            if getattr(args, name + "2") is None:
                setattr(args, name + "2", getattr(args, name))
        n = MIN_INDEX[family] if args.n is None else args.n
        n2 = n if args.n2 is None else args.n2
        tasks = [(_spec_from(args, family, n), _spec_from(args, family2, n2, "2"), args.certificate, args.refine_cap)]
    else:
        idx = _index_range(args, family)
        if args.max_n is None:
            idx = range(idx.start, idx.start + 2)
        tasks = [(_spec_from(args, family, k), _spec_from(args, family, k + 1), args.certificate, args.refine_cap)
                 for k in list(idx)[:-1]]
    return run_tasks(interlace_record, tasks, args.jobs)


def cmd_recur(args) -> list[dict]:
    if args.identity is None:
        raise UsageError("--identity is required: one of " + ", ".join(IDENTITIES))
    max_n = 30 if args.max_n is None else args.max_n
    max_t = 10 if args.max_t is None else args.max_t
    tasks = [(args.identity, key) for key in sweep_keys(args.identity, max_n, max_t)]
    return run_tasks(recur_record, tasks, args.jobs)


def cmd_logconcave(args) -> list[dict]:
    tasks = []
    if args.q or args.q_decompose:
        stop = 10 if args.max_n is None else args.max_n
        start = 1 if args.n is None else max(1, args.n)
        if args.q:
            tasks += [("q-real-rooted", n, None) for n in range(start, stop + 1)]
        if args.q_decompose:
            tasks += [("q-decompose", n, None) for n in range(start, stop + 1)]
    else:
        family = _need_family(args)
        folds = DEFAULT_FOLDS if args.folds is None else args.folds
        if folds < 1:
            raise UsageError("--folds must be >= 1")
        mode = "certify" if args.certify else "k-fold"
        tasks = [(mode, _spec_from(args, family, n), folds) for n in _index_range(args, family)]
    return run_tasks(logconcave_record, tasks, args.jobs)


def cmd_suite(args) -> list[dict]:
    bounds = SuiteBounds()
    if args.max_n is not None:
        bounds = bounds.capped(args.max_n)
    tasks = [(c.number, bounds, args.seed) for c in CRITERIA]
    return run_tasks(suite_record, tasks, args.jobs)


COMMANDS = {
    "gen": cmd_gen,
    "roots": cmd_roots,
    "interlace": cmd_interlace,
    "recur": cmd_recur,
    "logconcave": cmd_logconcave,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--alpha", type=parse_rational)
    common.add_argument("--beta", type=parse_rational)
    common.add_argument("--max-n", type=int)
    common.add_argument("--max-t", type=int)
    common.add_argument("--folds", type=int)
    common.add_argument("--identity", choices=IDENTITIES)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    common.add_argument("--refine-cap", type=int, help="bisection cap for root sign queries")

    parser = argparse.ArgumentParser(prog="narayana", description="Exact checks on generalized Narayana polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common], help="emit coefficient vectors")
    sub.add_parser("roots", parents=[common], help="real-rootedness and isolating intervals")
    p = sub.add_parser("interlace", parents=[common], help="interlacing along a chain or for one pair")
    p.add_argument("--family2", choices=FAMILIES)
    p.add_argument("--n2", type=int)
    p.add_argument("--m2", type=int)
    p.add_argument("--t2", type=int)
    p.add_argument("--alpha2", type=parse_rational)
    p.add_argument("--beta2", type=parse_rational)
    p.add_argument("--certificate", action="store_true", help="also run the Liu-Wang check (F family)")
    sub.add_parser("recur", parents=[common], help="verify recurrences over a grid")
    p = sub.add_parser("logconcave", parents=[common], help="log-concavity probes")
    p.add_argument("--certify", action="store_true", help="real-rootedness certificate, else bounded folds")
    p.add_argument("--q", action="store_true", help="real-rootedness of Q_n")
    p.add_argument("--q-decompose", action="store_true", help="compare Q_n with the N_{i,j} double sum")
    p = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    p.add_argument("--seed", type=int, default=0)
    return parser


RATIONAL_FLAGS = ("--alpha", "--beta", "--alpha2", "--beta2")


def _glue_negative_rationals(argv: Sequence[str]) -> list[str]:
    """argparse takes "-19/10" for an option; rewrite ``--beta -19/10`` as ``--beta=-19/10``."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in RATIONAL_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str]) -> tuple[ReportDocument, argparse.Namespace]:
    """Parse argv and build the report; raises UsageError/ValueError on bad input."""
    args = build_parser().parse_args(_glue_negative_rationals(argv))
    if args.jobs is None:
        args.jobs = default_jobs()
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    t0 = time.perf_counter()
    records = COMMANDS[args.command](args)
    doc = ReportDocument(command=list(argv), records=records,
                         duration_seconds=round(time.perf_counter() - t0, 6))
    return doc, args


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        doc, args = run(argv)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = doc.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return doc.exit_code


if __name__ == "__main__":
    sys.exit(main())
