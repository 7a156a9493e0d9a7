import pytest

_ACCEPTANCE = []


@pytest.fixture
def record_criterion(request):
    """Register a named acceptance criterion; its outcome is printed in the summary."""

    def record(label):
        _ACCEPTANCE.append((request.node.nodeid, label))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when == "call" or key != "passed":
                outcomes[rep.nodeid] = "PASS" if key == "passed" else "FAIL"
    terminalreporter.section("acceptance criteria")
    for nodeid, label in _ACCEPTANCE:
        terminalreporter.write_line(f"{outcomes.get(nodeid, 'FAIL')}  {label}")
