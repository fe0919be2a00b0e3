import pytest

_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label = mark.args[0]
    failed = rep.failed or (rep.when == "call" and rep.skipped)
    prev = _results.get(label, "PASS")
    if failed:
        _results[label] = "FAIL"
    elif rep.when == "call":
        _results[label] = prev


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: int(s.split(":")[0][2:])):
        terminalreporter.write_line(f"{_results[label]}  {label}")
