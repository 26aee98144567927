from __future__ import annotations

import pytest

_results: dict[int, tuple[str, list[str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    _, outcomes = _results.setdefault(number, (title, []))
    if rep.when == "call" or rep.failed or rep.skipped:
        outcomes.append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, outcomes = _results[number]
        status = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
