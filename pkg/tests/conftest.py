import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> list of (part, ok, detail)
_ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}
_TITLES: dict[int, str] = {}


@pytest.fixture
def record():
    """Log one part of an acceptance criterion for the end-of-run table."""

    def _record(number: int, title: str, part: str, ok: bool, detail: str = "") -> None:
        _TITLES[number] = title
        _ACCEPTANCE.setdefault(number, []).append((part, bool(ok), detail))

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[number]
        ok = all(p[1] for p in parts)
        failed = [f"{name}: {detail}" for name, good, detail in parts if not good]
        summary = "; ".join(failed) if failed else "; ".join(
            f"{name}: {detail}" if detail else name for name, _, detail in parts)
        tr.write_line(f"criterion {number} {'PASS' if ok else 'FAIL'} [{_TITLES[number]}] {summary}")
