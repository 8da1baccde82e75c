import pytest

ACCEPTANCE_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args[0]
    failed = rep.failed
    prev = ACCEPTANCE_RESULTS.get(key)
    if prev is None:
        ACCEPTANCE_RESULTS[key] = [marker.args[1], not failed]
    elif failed:
        prev[1] = False


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"AC{key:02d} {'PASS' if ok else 'FAIL'}  {title}")
