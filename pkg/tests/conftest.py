import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None:
        return
    if report.when in ("call", "teardown") or report.failed:
        results = pytest.acceptance_results
        status, timing = results.get(marker, ("PASS", ""))
        if report.failed:
            status = "FAIL"
        timing = dict(report.user_properties).get("timing", timing)
        results[marker] = (status, timing)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        report.acceptance = (int(m.args[0]), m.args[1])


def pytest_terminal_summary(terminalreporter):
    results = pytest.acceptance_results
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), (status, timing) in sorted(results.items()):
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  [{timing}]")


pytest.acceptance_results = {}
