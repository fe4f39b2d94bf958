"""Per-criterion pass/fail summary for the acceptance tests.

Tests carry ``@pytest.mark.criterion(n, "title")``; after the run one line per
criterion is printed, PASS only when every test tagged with it passed.
"""

from collections import OrderedDict

import pytest
from hypothesis import settings

# exact quaternion arithmetic makes single examples slow enough to trip the deadline
settings.register_profile("divlin", deadline=None)
settings.load_profile("divlin")

_RESULTS = OrderedDict()


def _marker(item):
    m = item.get_closest_marker("criterion")
    if m is None:
        return None
    number = m.args[0]
    title = m.args[1] if len(m.args) > 1 else ""
    return number, title


def pytest_collection_modifyitems(items):
    for item in items:
        info = _marker(item)
        if info is not None:
            entry = _RESULTS.setdefault(info[0], {"title": info[1], "passed": 0, "failed": 0, "tests": 0})
            entry["tests"] += 1
            if info[1] and not entry["title"]:
                entry["title"] = info[1]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    info = _marker(item)
    if info is None:
        return
    entry = _RESULTS[info[0]]
    if report.when == "call":
        entry["passed" if report.passed else "failed"] += 1
    elif report.failed:
        entry["failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        e = _RESULTS[number]
        ok = e["failed"] == 0 and e["passed"] == e["tests"]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:>2}: {status}  {e['title']} ({e['passed']}/{e['tests']} tests passed)")
