import numpy as np
import pytest

from transub.digraph import paley_tournament, random_oriented_graph, random_tournament

PALEY_ORDERS = (3, 7, 11, 19, 23, 27, 31)


@pytest.fixture(scope="session")
def paley():
    return {q: paley_tournament(q) for q in PALEY_ORDERS}


@pytest.fixture(scope="session")
def random_tournaments():
    """100 seeded tournaments with 2 <= v <= 12."""
    rng = np.random.default_rng(20240611)
    return [random_tournament(int(rng.integers(2, 13)), rng) for _ in range(100)]


@pytest.fixture(scope="session")
def random_digraphs():
    """Oriented graphs that are mostly not tournaments."""
    rng = np.random.default_rng(7)
    return [random_oriented_graph(int(rng.integers(2, 11)), rng, density=float(rng.uniform(0.3, 0.9)))
            for _ in range(40)]


_acceptance_lines: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        status = "PASS" if rep.passed else "FAIL"
        _acceptance_lines.append(f"[{status}] criterion {marker.args[0]}: {marker.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
