"""Acceptance criteria, one test each, run through the same registry as
``slce-lab verify-paper``.  Every test prints a single PASS/FAIL line."""
import pytest

from slce_lab.verify import SECTIONS, Config, run_check

# (section, criterion, time limit in seconds)
CRITERIA = [
    ("autocorrelation", 1, 10),
    ("gf9-multipliers", 2, 1),
    ("minus-one", 3, 30),
    ("exceptional-half", 4, 30),
    ("char-identity", 5, 60),
    ("congruence", 6, 60),
    ("stickelberger", 7, 120),
    ("lce-strong", 8, 5),
    ("main-theorem", 9, 300),
    ("families", 10, 300),
    ("properties", 11, 120),
]


@pytest.mark.parametrize("section,criterion,limit", CRITERIA,
                         ids=[f"{c:02d}-{s}" for s, c, _ in CRITERIA])
def test_criterion(section, criterion, limit, criterion_lines):
    res = run_check(SECTIONS[section], Config())
    passed, seconds, summary = res.passed, res.seconds, res.summary
    in_time = seconds < limit
    line = (f"{'PASS' if passed and in_time else 'FAIL'} criterion {criterion} [{section}] "
            f"{seconds:.2f}s/{limit}s: {summary}")
    print("\n" + line)
    criterion_lines.append(line)
    assert passed, summary
    assert in_time, f"took {seconds:.1f}s, limit {limit}s"
