import pytest

ACCEPTANCE_RESULTS: dict[int, list[tuple[str, str]]] = {}


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the n=4/n=6 exhaustive checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks, run only with --slow")
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    item_marks = getattr(report, "criterion", None)
    if item_marks is None:
        return
    ACCEPTANCE_RESULTS.setdefault(item_marks, []).append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        outcomes = [o for _, o in ACCEPTANCE_RESULTS[k]]
        if any(o == "failed" for o in outcomes):
            status = "FAIL"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        elif any(o == "passed" for o in outcomes):
            status = "PASS (slow parts skipped)"
        else:
            status = "SKIPPED"
        terminalreporter.write_line(f"criterion {k}: {status} ({outcomes.count('passed')}/{len(outcomes)} checks)")
