import os

import pytest

_acceptance: list[tuple[str, str]] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("PANCYCLE_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="long-running; set PANCYCLE_LONG=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _acceptance.append((name, report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome:8} {name}")
