from pathlib import Path

import pytest

from kpacking.graph import parse_graph6

DATA = Path(__file__).parent / "data"


def read_corpus(name: str) -> list[str]:
    return [ln.strip() for ln in (DATA / name).read_text().splitlines() if ln.strip()]


@pytest.fixture(scope="session")
def connected7():
    """All connected graphs with 1 <= n <= 7 (networkx atlas), as (graph6, Graph)."""
    return [(s, parse_graph6(s)) for s in read_corpus("connected_n_le_7.g6")]


@pytest.fixture(scope="session")
def trees10():
    """All unlabelled trees with 1 <= n <= 10, as (graph6, Graph)."""
    return [(s, parse_graph6(s)) for s in read_corpus("trees_n_le_10.g6")]


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
