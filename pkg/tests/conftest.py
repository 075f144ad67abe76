"""Collects outcomes of tests marked ``acceptance(number, title)`` and prints
one pass/fail line per criterion at the end of the run."""

import pytest

_RESULTS: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    entry = _RESULTS.setdefault(number, {"title": title, "passed": True, "count": 0})
    if report.when == "call":
        entry["count"] += 1
    if report.failed or (report.when == "setup" and report.skipped):
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        entry = _RESULTS[number]
        ok = entry["passed"] and entry["count"] > 0
        tag = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{tag}] {number}. {entry['title']} ({entry['count']} checks)")
