import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and rep.when == "call":
        number, title = marker.args
        _ACCEPTANCE.append((number, title, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_ACCEPTANCE):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number:>2}: {title}")
