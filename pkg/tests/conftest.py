"""Pytest wiring: one summary line per acceptance criterion.

Tests in test_acceptance.py carry an ``acceptance(num, label)`` marker.
After the run a PASS/FAIL line is printed for each criterion so the
gate can be read off without scanning the full report.
"""

import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, label): end-to-end acceptance criterion",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    num, label = marker.args
    if report.when == "call":
        _results[num] = (label, report.passed)
    elif report.when == "setup" and report.failed:
        _results[num] = (label, False)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_results):
        label, ok = _results[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {label}")
