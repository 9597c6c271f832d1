import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and (report.when == "call" or report.failed):
        n, text = marker.args
        _criteria.append((n, text, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n, text, passed in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {n:>2}: {text}")
