import json

import pytest

from torelli_cycles import corpus
from torelli_cycles.dual_graph import WeightedCycle
from torelli_cycles.io import cycle_to_json

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    item_marker = getattr(report, "criterion", None)
    if item_marker is None:
        return
    number, title = item_marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[number] = (title, report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")


@pytest.fixture
def theta():
    return corpus.theta_graph()


@pytest.fixture
def write_cycle(tmp_path):
    def write(cycle, name="graph.json"):
        path = tmp_path / name
        data = cycle_to_json(cycle) if isinstance(cycle, WeightedCycle) else cycle
        path.write_text(json.dumps(data))
        return str(path)
    return write
