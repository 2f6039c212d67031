import pytest

# collected at session start: nodeid -> first docstring line, in file order
_labels: dict = {}
_results: dict = {}
_info: list = []


@pytest.fixture(scope="session")
def acceptance_info():
    """Collector for informational lines printed with the acceptance summary."""
    return _info.append


def pytest_collection_modifyitems(items):
    for item in items:
        if item.path is not None and item.path.name == "test_acceptance.py":
            doc = (item.obj.__doc__ or item.name).strip().splitlines()[0]
            _labels[item.nodeid] = doc


def pytest_runtest_logreport(report):
    if report.nodeid not in _labels:
        return
    if report.when == "call":
        _results[report.nodeid] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _results[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid, label in _labels.items():
        outcome = _results.get(nodeid, "not run")
        word = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}.get(
            outcome, outcome.upper()
        )
        terminalreporter.write_line(f"[{word}] {label}")
    for line in _info:
        terminalreporter.write_line(line)
