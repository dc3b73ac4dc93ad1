"""One test per acceptance criterion; each prints a single pass/fail line."""

import pytest

from ncsurf.acceptance import CRITERIA, run_criterion

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


def _line(rec):
    return f"[{rec['result']}] {rec['id']} {rec['title']} ({rec['seconds']}s)"


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k):
    rec = run_criterion(k)
    line = _line(rec)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert rec["result"] == "PASS", rec["detail"]


if __name__ == "__main__":
    import sys

    recs = [run_criterion(k) for k in range(1, len(CRITERIA) + 1)]
    for rec in recs:
        print(_line(rec))
    sys.exit(0 if all(r["result"] == "PASS" for r in recs) else 1)
