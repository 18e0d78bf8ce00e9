"""Acceptance criteria 1-10 at full scale and stated time budgets.

Each criterion prints one PASS/FAIL line; the lines are also repeated in the
terminal summary so they show up without ``-s``.
"""

import pytest

from rydcalc.verify import SUITES, run_suite

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.mark.parametrize("number", sorted(SUITES), ids=[f"criterion_{k}_{SUITES[k][0].replace(' ', '_')}" for k in sorted(SUITES)])
def test_criterion(number):
    result = run_suite(number)
    line = f"criterion {number}: {result.summary()}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    assert result.passed, result.to_json()
