"""Shared fixtures: small hand-traceable graphs, rating tables and a synthetic dataset."""

from typing import Iterable, Tuple

import networkx as nx
import pytest

from trustprop.models import RatingTable, TrustGraph
from trustprop.services.data_service import data_service


def build_graph(node_count: int, edges: Iterable[Tuple[int, int]], weight: float = 1.0) -> TrustGraph:
    graph = TrustGraph(node_count)
    for src, dst in edges:
        graph.add_edge(src, dst, weight)
    return graph


def random_digraph(n: int, mean_out_degree: float, seed: int) -> TrustGraph:
    """Seeded G(n, p) digraph with roughly the requested mean out-degree."""
    p = min(1.0, mean_out_degree / max(1, n - 1))
    nx_graph = nx.gnp_random_graph(n, p, seed=seed, directed=True)
    return build_graph(n, sorted(nx_graph.edges()))


@pytest.fixture
def chain_graph():
    """0 -> 1 -> 2 -> 3"""
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def diamond_graph():
    """0 -> {1, 2} -> 3"""
    return build_graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def fork_graph():
    """
    0 -> 1 -> {2, 3}, 2 -> 4, 3 -> 5 with weights favouring node 2.

    From source 0 the cut-off at node 1 is mean(10, 2) = 6, so node 3 is not
    expanded and <0,5> is only reachable through it.
    """
    graph = build_graph(6, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 5)])
    weights = [0.0, 0.0, 10.0, 2.0, 0.0, 0.0]
    return graph, weights


@pytest.fixture
def five_node_graph():
    """1 -> {2, 3} -> 4 -> 5 on ids 0..5 (node 0 unused) with weights on 2..5."""
    graph = build_graph(6, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5)])
    weights = [0.0, 0.0, 10.0, 2.0, 5.0, 1.0]
    return graph, weights


@pytest.fixture
def single_neighbor_case():
    """User 0 (mean 3.0) trusts user 1 (mean 3.5, rated item 0 with 4.0) at 0.5."""
    graph = build_graph(2, [(0, 1)], weight=0.5)
    ratings = RatingTable(2, 3, scale=(1.0, 5.0))
    ratings.add_rating(0, 1, 2.0)
    ratings.add_rating(0, 2, 4.0)
    ratings.add_rating(1, 0, 4.0)
    ratings.add_rating(1, 1, 3.0)
    return graph, ratings


@pytest.fixture
def two_neighbor_case():
    """User 0 (mean 3) trusts 1 at 0.6 (r=5, mean 4) and 2 at 0.4 (r=2, mean 3) on item 0."""
    graph = TrustGraph(3)
    graph.add_edge(0, 1, 0.6)
    graph.add_edge(0, 2, 0.4)
    ratings = RatingTable(3, 2, scale=(1.0, 5.0))
    ratings.add_rating(0, 1, 3.0)
    ratings.add_rating(1, 0, 5.0)
    ratings.add_rating(1, 1, 3.0)
    ratings.add_rating(2, 0, 2.0)
    ratings.add_rating(2, 1, 4.0)
    return graph, ratings


@pytest.fixture
def synthetic_dataset(tmp_path):
    """Seeded power-law dataset written in the dataset directory layout."""
    graph = data_service.generate_powerlaw(80, 2, seed=7, reciprocity=0.3)
    ratings = data_service.generate_ratings(graph, 120, mean_per_user=6.0, seed=7)
    paths = data_service.write_dataset(graph, ratings, str(tmp_path / "synthetic"))
    return paths


def brute_force_paths(graph: TrustGraph, l_max: int):
    """Every simple path of length 2..l_max between non-adjacent pairs, by plain recursion."""
    adjacency = {u: set(graph.successors(u)) for u in graph.nodes()}
    found = {}

    def walk(path):
        if len(path) - 1 >= 2 and path[-1] not in adjacency[path[0]]:
            found.setdefault((path[0], path[-1]), set()).add(tuple(path))
        if len(path) - 1 == l_max:
            return
        for nxt in adjacency[path[-1]]:
            if nxt not in path:
                walk(path + [nxt])

    for source in graph.nodes():
        walk([source])
    return found
