import re

_CRITERION = re.compile(r"test_criterion_(\d+)_")
_results: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    ok = _results.get(n, True)
    if report.failed or (report.when == "call" and report.skipped):
        ok = False
    _results[n] = ok


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        terminalreporter.write_line(f"ACCEPTANCE criterion {n}: {'PASS' if _results[n] else 'FAIL'}")
