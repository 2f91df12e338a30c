import random

import pytest
from hypothesis import strategies as st

from minmin.graph import Graph, build_graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                           if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


_criteria: list[tuple[str, str, str, float]] = []
_notes: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion")


@pytest.fixture
def note():
    """Append an informational line to the acceptance summary."""
    return _notes.append


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (rep.when == "call" or rep.failed):
        return
    status = "PASS" if rep.passed else "FAIL"
    _criteria.append((str(mark.args[0]), mark.args[1], status, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label, title, status, seconds in _criteria:
        tr.write_line(f"{status} criterion {label}: {title} ({seconds:.1f}s)")
    for line in _notes:
        tr.write_line(f"info: {line}")
