import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from torusfan.constructions import gallery, p1_times_elliptic  # noqa: E402


@pytest.fixture(scope="session")
def triples():
    g = gallery()
    g["p1_times_elliptic"] = p1_times_elliptic()
    return g


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str) -> bool:
    ACCEPTANCE[number] = (ok, detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
