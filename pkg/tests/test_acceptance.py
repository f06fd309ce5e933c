"""Acceptance criteria at full scale, one test per criterion.

Every row is printed as a PASS/FAIL line (also collected into the terminal
summary).  A row passes when its check holds and the criterion finished
inside its time limit.
"""
import pytest

from btquot.checks import ALL

LINES: list[str] = []


@pytest.mark.parametrize("criterion", sorted(ALL))
def test_criterion(criterion):
    rows = ALL[criterion]()
    for r in rows:
        LINES.append(r.line())
        print(r.line())
    failed = [r.line() for r in rows if not r.ok]
    assert not failed, "\n".join(failed)
