"""Collects acceptance verdicts and prints one line per criterion at the end of the run."""

import pytest

ACCEPTANCE = {}


@pytest.fixture
def verdict(request):
    """Record ``(number, title)`` for an acceptance test; pass/fail is read from the report."""

    def record(number: int, title: str, detail: str = "") -> None:
        ACCEPTANCE[request.node.nodeid] = [number, title, detail, None]

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    entry = ACCEPTANCE.get(item.nodeid)
    if entry is not None and report.when == "call":
        entry[3] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, detail, passed in sorted(ACCEPTANCE.values()):
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number:2d}: {status}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
