from itertools import combinations

import pytest

ACCEPTANCE_LINES: list[str] = []


def all_graph_degree_tuples(n):
    """Positional degree tuples of every labeled graph on n vertices (brute force)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                deg[u] += 1
                deg[v] += 1
        yield tuple(deg)


@pytest.fixture(scope="session")
def degree_sets():
    """n -> set of sorted degree sequences realised by some graph, n <= 6."""
    return {
        n: {tuple(sorted(d, reverse=True)) for d in all_graph_degree_tuples(n)}
        for n in range(1, 7)
    }


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
