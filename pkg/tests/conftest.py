import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from auxetica.lab import family_framework  # noqa: E402


@pytest.fixture(scope="session")
def f16():
    return family_framework(Fraction(1, 6))


@pytest.fixture(scope="session")
def f13():
    return family_framework(Fraction(1, 3))


@pytest.fixture(scope="session")
def f512():
    return family_framework(Fraction(5, 12))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
