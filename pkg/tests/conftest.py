from __future__ import annotations

import re

import pytest

_CRITERIA: dict[int, tuple[str, bool]] = {}
_NAME = re.compile(r"test_criterion_(\d+)_")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = _NAME.match(item.name)
    if not m or report.when not in ("setup", "call"):
        return
    n = int(m.group(1))
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    ok = report.passed if report.when == "call" else not report.failed
    if report.when == "setup" and ok:
        return
    prev = _CRITERIA.get(n, (title, True))[1]
    _CRITERIA[n] = (title, prev and ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
