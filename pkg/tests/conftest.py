"""Shared pytest configuration.

The acceptance module's tests each carry a `criterion` marker; after the
run, one PASS/FAIL line per criterion is printed so the acceptance gate
can be read at a glance.
"""

import pytest

_ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(text): acceptance criterion checked by this test"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker:
        _ACCEPTANCE_RESULTS[item.nodeid] = (
            "PASS" if report.passed else "FAIL",
            marker.args[0],
        )


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for status, text in _ACCEPTANCE_RESULTS.values():
        terminalreporter.write_line(f"{status}  {text}")
