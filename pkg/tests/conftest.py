import random

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from distgraphs.model import Graph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_graph(rng: random.Random, order: int, density: float) -> Graph:
    adj = np.zeros((order, order), dtype=bool)
    for i in range(order):
        for j in range(i + 1, order):
            if rng.random() < density:
                adj[i, j] = adj[j, i] = True
    return Graph.from_matrix(adj)


def cycle(k: int) -> Graph:
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = "PASS" if rep.passed else "SKIP" if rep.skipped else "FAIL"
        item.config._criteria.append((marker.args[0], status, item.name))


def pytest_terminal_summary(terminalreporter, config):
    rows = getattr(config, "_criteria", [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, name in rows:
        terminalreporter.write_line(f"[{status}] {label}  ({name})")
