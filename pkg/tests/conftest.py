import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from gemcensus.classify import gamma_class  # noqa: E402
from gemcensus.generation import generate_catalogue  # noqa: E402


@pytest.fixture(scope="session")
def catalogue26():
    return generate_catalogue(26)


@pytest.fixture(scope="session")
def catalogue20(catalogue26):
    return catalogue26.filter(lambda e: e.order <= 20)


@pytest.fixture(scope="session")
def classes26(catalogue26):
    errors = []
    return gamma_class(catalogue26, errors=errors), errors


ACCEPTANCE: dict[int, str] = {}


def report(number: int, ok: bool | None, detail: str) -> None:
    """Record and print the result line of one acceptance criterion."""
    status = {True: "PASS", False: "FAIL", None: "SKIP"}[ok]
    line = f"criterion {number:2d}: {status}  {detail}"
    ACCEPTANCE[number] = line
    print("\n" + line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
