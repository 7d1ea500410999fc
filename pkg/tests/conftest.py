import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the end-of-run summary."""
    name = request.node.get_closest_marker("criterion")
    label = name.args[0] if name else request.node.name
    notes = []
    _ACCEPTANCE[label] = ("FAIL", notes)
    yield notes
    rep = getattr(request.node, "rep_call", None)
    if rep is not None and rep.passed:
        _ACCEPTANCE[label] = ("PASS", notes)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0]) if s.split()[0].isdigit() else 99):
        status, notes = _ACCEPTANCE[label]
        extra = f"  [{'; '.join(notes)}]" if notes else ""
        terminalreporter.write_line(f"{status}  {label}{extra}")
