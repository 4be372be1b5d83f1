import pytest

_RESULTS = {}


class AcceptanceRecorder:
    def record(self, number: int, ok: bool, detail: str) -> bool:
        _RESULTS[number] = (bool(ok), detail)
        return ok


@pytest.fixture
def acceptance():
    return AcceptanceRecorder()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    # an exception before record() still has to show up as FAIL
    if number is not None and report.when == "call" and report.failed and number not in _RESULTS:
        _RESULTS[number] = (False, f"error: {call.excinfo.typename}")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        ok, detail = _RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
