import pytest

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (report.when == "call" or report.outcome == "skipped"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        detail = dict(report.user_properties).get("measured", "")
        if report.skipped and isinstance(report.longrepr, tuple):
            detail = report.longrepr[2].removeprefix("Skipped: ")
        _acceptance.append((report.outcome.upper(), doc, detail))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for outcome, doc, detail in _acceptance:
        status = {"PASSED": "PASS", "FAILED": "FAIL", "SKIPPED": "SKIP"}[outcome]
        terminalreporter.write_line(f"{status:<5}{doc}" + (f"  [{detail}]" if detail else ""))
