import random
from itertools import combinations

import networkx as nx
import pytest

from toughlab.graph import Graph, is_connected


def from_nx(G: nx.Graph) -> Graph:
    G = nx.convert_node_labels_to_integers(G)
    return Graph.from_edges(G.number_of_nodes(), G.edges())


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    edges |= {e for e in combinations(range(n), 2) if rng.random() < p}
    g = Graph.from_edges(n, edges)
    assert is_connected(g)
    return g


def brute_alpha(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        if bin(mask).count("1") > best and all(
            not (g.adj[v] & mask) for v in range(g.n) if mask >> v & 1
        ):
            best = bin(mask).count("1")
    return best


@pytest.fixture(scope="session")
def random_corpus() -> list[Graph]:
    """500 connected graphs on 2..12 vertices, fixed seed."""
    rng = random.Random(20240517)
    return [random_connected_graph(rng, rng.randint(2, 12), rng.choice([0.1, 0.2, 0.35, 0.5, 0.7]))
            for _ in range(500)]
