import pytest

from mccool.cache import clear_memory

_criteria = []


@pytest.fixture(scope="session", autouse=True)
def _fresh_memory():
    clear_memory()
    yield


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the test body must set ``.detail``."""

    class Entry:
        def __init__(self):
            self.label = request.node.function.__doc__.strip().splitlines()[0]
            self.detail = ""

    entry = Entry()
    yield entry
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    _criteria.append((entry.label, ok, entry.detail))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
