import random

import pytest

from diamup import Graph, complete_graph, cycle_graph, is_connected


@pytest.fixture(scope="session")
def petersen():
    from diamup import petersen_graph

    return petersen_graph()


@pytest.fixture(scope="session")
def example2():
    """Five-cycle plus one vertex joined to two non-adjacent cycle vertices."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (2, 5)])


@pytest.fixture(scope="session")
def wheel5():
    """Five-cycle plus a hub adjacent to everything."""
    rim = cycle_graph(5)
    return Graph(6, list(rim.edges) + [(i, 5) for i in range(5)])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Seeded G(n, p) retried until connected."""
    while True:
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = Graph(n, edges)
        if is_connected(g):
            return g


@pytest.fixture(scope="session")
def small_catalog():
    """Connected graphs on at most 6 vertices, one per isomorphism class."""
    from diamup import connected_graphs_up_to

    return connected_graphs_up_to(6)
