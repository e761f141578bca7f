"""Acceptance gate: the twelve criteria at full bounds, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or directly
with ``python tests/test_acceptance.py``.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from narayana.suite import CRITERIA, SuiteBounds, run_criterion

BOUNDS = SuiteBounds()
SEED = 0


def line(rec: dict) -> str:
    verdict = "PASS" if rec["passed"] else "FAIL"
    tag = " [conjecture-probe]" if rec["severity"] == "conjecture-probe" else ""
    return f"[{rec['criterion']:>2}] {verdict} {rec['title']}{tag}: {rec['detail']}"


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{c.number:02d}" for c in CRITERIA])
def test_criterion(crit):
    rec = run_criterion(crit, BOUNDS, SEED)
    print("\n" + line(rec))
    ACCEPTANCE_LINES.append(line(rec))
    # a conjecture probe that misses is a finding, still asserted here so it shows red
    assert rec["passed"], line(rec)


if __name__ == "__main__":
    import sys

    recs = [run_criterion(c, BOUNDS, SEED) for c in CRITERIA]
    for r in recs:
        print(line(r))
    sys.exit(0 if all(r["passed"] for r in recs) else 1)
