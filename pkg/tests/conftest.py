import pytest

_criteria: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        verdict = "PASS" if rep.outcome == "passed" else "FAIL"
        if rep.outcome == "failed" and call.excinfo is not None:
            detail = (detail + "; " if detail else "") + call.excinfo.exconly().splitlines()[0][:200]
        _criteria[number] = (title, verdict, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict, detail = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2} {verdict}  {title}" + (f"  [{detail}]" if detail else ""))
