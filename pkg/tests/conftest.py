import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def fresh_caches():
    """Drop memoised fields and SLCE sets before and after a test."""
    from slce_lab import gf, mult

    def clear():
        gf.make_field.cache_clear()
        mult.slce_set.cache_clear()
        mult.compute_S0.cache_clear()

    clear()
    yield
    clear()


_CRITERION_LINES = []


@pytest.fixture
def criterion_lines():
    return _CRITERION_LINES


def pytest_terminal_summary(terminalreporter):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERION_LINES:
            terminalreporter.write_line(line)
