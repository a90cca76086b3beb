import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from clusteraut.builtin import builtin_quiver  # noqa: E402
from clusteraut.exchange_graph import build_graph, geodesic_loops  # noqa: E402

_GRAPHS: dict = {}


def _graph(name, radius=None):
    key = (name, radius)
    if key not in _GRAPHS:
        G = build_graph(builtin_quiver(name), max_radius=radius)
        _GRAPHS[key] = (G, geodesic_loops(G))
    return _GRAPHS[key]


@pytest.fixture(scope="session")
def graph():
    """Session cache: ``graph(name, radius=None) -> (G, loops)``."""
    return _graph


@pytest.fixture(scope="session")
def built_graphs():
    return _GRAPHS


# -- acceptance report ------------------------------------------------------

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (rep.when == "call" or rep.failed or rep.skipped):
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, {"title": title, "failed": [], "seen": set()})
    entry["seen"].add(item.nodeid)
    if hasattr(rep, "wasxfail"):
        entry["failed"].append(f"{item.name} (expected failure: {rep.wasxfail})")
    elif rep.failed or rep.skipped:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "FAIL" if entry["failed"] else "PASS"
        terminalreporter.write_line(f"{status} criterion {number}: {entry['title']}")
        for why in entry["failed"]:
            terminalreporter.write_line(f"     {why}")
