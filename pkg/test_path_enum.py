import random
import time

import pytest

from trustprop.exceptions import ValidationError
from trustprop.models import CutoffKind, EnumConfig, Method, WeightConfig
from trustprop.services.data_service import data_service
from trustprop.services.path_service import (alpha_cutoff, enumerate_all, enumerate_h1, enumerate_h2,
                                             enumerate_paths, theta_cutoff)
from trustprop.services.weight_service import compute_weights, indegree_weights

from conftest import brute_force_paths, build_graph, random_digraph


def as_sets(index):
    return {key: set(paths) for key, paths in index.items()}


def all_paths(index):
    return {path for _, paths in index.items() for path in paths}


def test_theta_cutoff():
    assert theta_cutoff([2, 4, 6], 1) == pytest.approx(4)
    assert theta_cutoff([2, 4, 6], 2) == pytest.approx(8)
    assert theta_cutoff([5], 1) == pytest.approx(5)
    with pytest.raises(ValidationError):
        theta_cutoff([], 1)


def test_alpha_cutoff_nearest_rank():
    values = list(range(1, 11))
    assert alpha_cutoff(values, 50) == 5
    assert alpha_cutoff(values, 90) == 9
    assert alpha_cutoff([7], 10) == 7
    assert alpha_cutoff([7], 99) == 7
    assert alpha_cutoff([9, 1, 5, 3], 60) == 5
    assert alpha_cutoff([9, 1, 5, 3], 25) == 1
    with pytest.raises(ValidationError):
        alpha_cutoff(values, 100)


def test_enumerate_all_chain(chain_graph):
    index = enumerate_all(chain_graph, 3)
    assert as_sets(index) == {
        (0, 2): {(0, 1, 2)},
        (0, 3): {(0, 1, 2, 3)},
        (1, 3): {(1, 2, 3)},
    }


def test_enumerate_all_complete_graph_is_empty():
    complete = build_graph(4, [(i, j) for i in range(4) for j in range(4) if i != j])
    assert len(enumerate_all(complete, 3)) == 0


def test_enumerate_all_diamond(diamond_graph):
    index = enumerate_all(diamond_graph, 2)
    assert list(index.keys()) == [(0, 3)]
    assert index.paths(0, 3) == [(0, 1, 3), (0, 2, 3)]


@pytest.mark.parametrize("seed", range(100))
def test_enumerate_all_matches_brute_force(seed):
    rng = random.Random(seed)
    graph = random_digraph(rng.randint(5, 60), rng.uniform(1.0, 4.0), seed=seed)
    l_max = rng.choice([2, 3, 4])
    index = enumerate_all(graph, l_max)
    assert as_sets(index) == brute_force_paths(graph, l_max)
    assert index.path_count() == sum(len(p) for p in brute_force_paths(graph, l_max).values())


def test_h1_prunes_below_mean(fork_graph):
    graph, weights = fork_graph
    cfg = EnumConfig(l_max=3, method=Method.H1, c_th=1.0)
    index = enumerate_h1(graph, weights, cfg)
    assert as_sets(index) == {
        (0, 2): {(0, 1, 2)},
        (0, 3): {(0, 1, 3)},
        (0, 4): {(0, 1, 2, 4)},
        (1, 4): {(1, 2, 4)},
        (1, 5): {(1, 3, 5)},
    }


def test_h2_recovers_pruned_pair(fork_graph):
    graph, weights = fork_graph
    index = enumerate_h2(graph, weights, EnumConfig(l_max=3, method=Method.H2, c_th=1.0))
    assert index.paths(0, 5) == [(0, 1, 3, 5)]
    assert set(index.keys()) == set(enumerate_all(graph, 3).keys())


def test_h1_first_hop_is_never_pruned(five_node_graph):
    graph, weights = five_node_graph
    index = enumerate_h1(graph, weights, EnumConfig(l_max=3, method=Method.H1, c_th=1.0))
    assert index.paths(1, 4) == [(1, 2, 4), (1, 3, 4)]
    assert index.paths(1, 5) == [(1, 2, 4, 5), (1, 3, 4, 5)]
    assert index.paths(2, 5) == [(2, 4, 5)]
    assert index.paths(3, 5) == [(3, 4, 5)]
    assert index.pair_count() == 4


def test_h2_equals_h1_when_nothing_is_lost(five_node_graph):
    graph, weights = five_node_graph
    h1 = enumerate_h1(graph, weights, EnumConfig(l_max=3, method=Method.H1))
    h2 = enumerate_h2(graph, weights, EnumConfig(l_max=3, method=Method.H2))
    assert h1 == h2


def test_zero_cth_reproduces_oracle():
    graph = random_digraph(40, 3.0, seed=21)
    weights = indegree_weights(graph)
    h1 = enumerate_h1(graph, weights, EnumConfig(l_max=3, method=Method.H1, c_th=0.0))
    assert h1 == enumerate_all(graph, 3)


@pytest.mark.parametrize("seed", range(20))
def test_subset_chain_on_random_graphs(seed):
    rng = random.Random(seed)
    graph = random_digraph(rng.randint(10, 50), rng.uniform(1.5, 4.0), seed=seed)
    weights = [rng.uniform(0.0, 10.0) for _ in graph.nodes()]
    l_max = rng.choice([2, 3, 4])
    oracle = enumerate_all(graph, l_max)
    h1 = enumerate_paths(graph, EnumConfig(l_max=l_max, method=Method.H1), weights)
    h2 = enumerate_paths(graph, EnumConfig(l_max=l_max, method=Method.H2), weights)

    assert set(h1.keys()) <= set(h2.keys()) == set(oracle.keys())
    assert all_paths(h1) <= all_paths(oracle)
    assert all_paths(h2) <= all_paths(oracle)
    assert h1.path_count() <= h2.path_count() <= oracle.path_count()
    h1.validate(graph, l_max)
    h2.validate(graph, l_max)


def test_h1_monotone_in_cth():
    graph = data_service.generate_powerlaw(200, 3, seed=4, reciprocity=0.4)
    weights = indegree_weights(graph)
    previous = None
    for c_th in (0, 0.5, 1, 2, 4):
        index = enumerate_h1(graph, weights, EnumConfig(l_max=3, method=Method.H1, c_th=c_th))
        current = as_sets(index)
        if previous is not None:
            assert set(current) <= set(previous)
            assert all(current[key] <= previous[key] for key in current)
        previous = current


def test_h1_monotone_in_alpha():
    graph = data_service.generate_powerlaw(200, 3, seed=4, reciprocity=0.4)
    weights = indegree_weights(graph)
    counts = []
    for alpha in range(10, 100, 10):
        cfg = EnumConfig(l_max=3, method=Method.H1, cutoff=CutoffKind.ALPHA, alpha=alpha)
        index = enumerate_h1(graph, weights, cfg)
        counts.append((index.pair_count(), index.path_count()))
    assert counts == sorted(counts, reverse=True)


@pytest.mark.parametrize("seed", range(50))
@pytest.mark.parametrize("kind", ["indeg", "delta", "gamma"])
def test_h2_preserves_key_set_on_powerlaw(seed, kind):
    graph = data_service.generate_powerlaw(300, 3, seed=seed, reciprocity=0.1)
    ratings = data_service.generate_ratings(graph, 400, seed=seed)
    weights = compute_weights(graph, WeightConfig(kind=kind), 4, ratings)
    cfg = EnumConfig(l_max=4, method=Method.H2, c_th=1.0 if kind == "indeg" else 40.0)
    h2 = enumerate_h2(graph, weights, cfg)
    assert set(h2.keys()) == set(enumerate_all(graph, 4).keys())


def test_parallel_run_matches_sequential():
    graph = data_service.generate_powerlaw(150, 3, seed=8, reciprocity=0.3)
    weights = indegree_weights(graph)
    cfg = EnumConfig(l_max=3, method=Method.H2)
    sequential = enumerate_paths(graph, cfg, weights, workers=1)
    parallel = enumerate_paths(graph, cfg, weights, workers=3)
    assert sequential.to_lines() == parallel.to_lines()
    assert sequential == parallel


def test_pruned_methods_need_weights(chain_graph):
    with pytest.raises(ValidationError):
        enumerate_paths(chain_graph, EnumConfig(l_max=3, method=Method.H1))
    with pytest.raises(ValidationError):
        enumerate_h1(chain_graph, [0.0] * 4, EnumConfig(l_max=3, method=Method.H2))


@pytest.mark.parametrize("cfg", [
    EnumConfig(l_max=1),
    EnumConfig(l_max=3, c_th=-1.0),
    EnumConfig(l_max=3, cutoff=CutoffKind.ALPHA, alpha=0.0),
])
def test_enum_config_validation(cfg, chain_graph):
    with pytest.raises(ValidationError):
        enumerate_paths(chain_graph, cfg)


def test_path_counts_ordered_on_large_powerlaw():
    graph = data_service.generate_powerlaw(500, 3, seed=1)
    weights = indegree_weights(graph)
    started = time.perf_counter()
    oracle = enumerate_all(graph, 5)
    all_seconds = time.perf_counter() - started
    started = time.perf_counter()
    h1 = enumerate_h1(graph, weights, EnumConfig(l_max=5, method=Method.H1))
    h1_seconds = time.perf_counter() - started
    h2 = enumerate_h2(graph, weights, EnumConfig(l_max=5, method=Method.H2))
    assert h1.path_count() < h2.path_count() < oracle.path_count()
    assert h1_seconds < all_seconds
