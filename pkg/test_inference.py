import math
import random

import networkx as nx
import pytest

from trustprop.exceptions import CorruptIndexError, ValidationError
from trustprop.models import BenefitKind, EnumConfig, Method, PathIndex, ScoringConfig, WeightConfig
from trustprop.services.data_service import data_service
from trustprop.services.inference_service import (benefit_delta, benefit_gamma, build_inferred,
                                                  explain_pair, penalty, score_path,
                                                  scoring_config_for)
from trustprop.services.metrics_service import score_and_mean_error
from trustprop.services.path_service import enumerate_all, enumerate_paths
from trustprop.services.weight_service import compute_weights

from conftest import brute_force_paths, random_digraph


@pytest.mark.parametrize("length, l_max, expected", [(2, 3, 1 / 3), (6, 6, 5 / 6), (2, 6, 1 / 6)])
def test_penalty(length, l_max, expected):
    assert penalty(length, l_max) == pytest.approx(expected)


@pytest.mark.parametrize("length", [1, 4])
def test_penalty_out_of_range(length):
    with pytest.raises(ValidationError):
        penalty(length, 3)


def test_benefit_delta():
    delta = [0.0, 0.1, 0.05, 0.2, 0.2]
    assert benefit_delta([1, 2], delta) == pytest.approx(0.15)
    assert benefit_delta([0], delta) == 0.0
    assert benefit_delta([3, 4], delta) == pytest.approx(0.4)


def test_benefit_gamma():
    assert benefit_gamma([0], [0.0], 5) == pytest.approx(0.1)
    assert benefit_gamma([0, 1], [math.log(3), 0.0], 4) == pytest.approx(0.1875)
    assert benefit_gamma([0], [1000.0], 4) == pytest.approx(0.25)
    assert benefit_gamma([0], [1000.0], 4) <= 0.25


def test_score_path_examples():
    plain = ScoringConfig(l_max=3, benefit=BenefitKind.DELTA_SUM, benefit_weights=[0.0] * 4)
    assert score_path((0, 1, 2), plain) == pytest.approx(2 / 3)

    weighted = ScoringConfig(l_max=5, benefit_weights=[0.0, 0.1, 0.05, 0.0])
    assert score_path((0, 1, 2, 3), weighted) == pytest.approx(0.75)

    bound = ScoringConfig(l_max=3, benefit_weights=[0.0, 1 / 3, 0.0])
    assert score_path((0, 1, 2), bound) == pytest.approx(1.0)


def test_build_inferred_diamond(diamond_graph):
    index = enumerate_all(diamond_graph, 2)
    cfg = ScoringConfig(l_max=2, benefit_weights=[0.0, 0.2, 0.1, 0.0])
    inferred = build_inferred(diamond_graph, index, cfg)
    assert inferred.weight(0, 3) == pytest.approx(0.7)
    assert inferred.is_inferred(0, 3)
    for src, dst, weight in diamond_graph.edges():
        assert inferred.weight(src, dst) == weight
        assert not inferred.is_inferred(src, dst)

    score, path = explain_pair(index, cfg, 0, 3)
    assert score == pytest.approx(0.7)
    assert path == (0, 1, 3)


def test_explain_pair_breaks_ties_lexicographically(diamond_graph):
    index = PathIndex()
    index.add((0, 2, 3))
    index.add((0, 1, 3))
    cfg = ScoringConfig(l_max=2, benefit_weights=[0.0, 0.1, 0.1, 0.0])
    assert explain_pair(index, cfg, 0, 3)[1] == (0, 1, 3)
    with pytest.raises(ValidationError):
        explain_pair(index, cfg, 1, 2)


def test_empty_index_copies_graph(chain_graph):
    inferred = build_inferred(chain_graph, PathIndex(), ScoringConfig(l_max=3))
    assert list(inferred.edges()) == list(chain_graph.edges())
    assert inferred.inferred_count == 0


def test_corrupt_index_is_rejected(chain_graph):
    index = PathIndex()
    index.add((0, 2, 3))
    with pytest.raises(CorruptIndexError):
        build_inferred(chain_graph, index, ScoringConfig(l_max=3, benefit_weights=[0.0] * 4))


def test_max_is_order_independent(diamond_graph):
    cfg = ScoringConfig(l_max=2, benefit_weights=[0.0, 0.05, 0.3, 0.0])
    forward = PathIndex()
    forward.add((0, 1, 3))
    forward.add((0, 2, 3))
    backward = PathIndex()
    backward.add((0, 2, 3))
    backward.add((0, 1, 3))
    assert build_inferred(diamond_graph, forward, cfg).weight(0, 3) == \
        build_inferred(diamond_graph, backward, cfg).weight(0, 3)


@pytest.mark.parametrize("seed", range(100))
def test_inferred_trust_matches_brute_force(seed):
    rng = random.Random(seed)
    graph = random_digraph(rng.randint(5, 60), rng.uniform(1.0, 4.0), seed=seed)
    if graph.edge_count == 0:
        return
    l_max = rng.choice([2, 3, 4])
    inferred = build_inferred(graph, enumerate_all(graph, l_max),
                              scoring_config_for(graph, WeightConfig(), l_max))

    indeg = graph.indegrees()
    top = max(indeg)
    delta = [(1.0 / l_max) * d / top for d in indeg]
    expected = {}
    for key, paths in brute_force_paths(graph, l_max).items():
        expected[key] = max(1.0 - (len(p) - 2) / l_max + sum(delta[x] for x in p[1:-1]) for p in paths)

    assert {(s, d) for s, d, _ in inferred.inferred_edges()} == set(expected)
    for src, dst, weight in inferred.inferred_edges():
        assert weight == pytest.approx(expected[(src, dst)], abs=1e-12)


@pytest.mark.parametrize("kind", ["indeg", "delta", "gamma"])
def test_inferred_weights_in_unit_interval(kind):
    graph = data_service.generate_powerlaw(150, 3, seed=2, reciprocity=0.3)
    ratings = data_service.generate_ratings(graph, 200, seed=2)
    for l_max in (2, 3, 4):
        cfg = scoring_config_for(graph, WeightConfig(kind=kind), l_max, ratings)
        inferred = build_inferred(graph, enumerate_all(graph, l_max), cfg)
        assert all(0.0 < w <= 1.0 for _, _, w in inferred.inferred_edges())


def test_zero_benefit_picks_shortest_path():
    graph = random_digraph(40, 3.0, seed=13)
    nx_graph = nx.DiGraph((s, d) for s, d, _ in graph.edges())
    index = enumerate_all(graph, 4)
    cfg = ScoringConfig(l_max=4, benefit=BenefitKind.NONE)
    for (src, dst), paths in index.items():
        _, best = explain_pair(index, cfg, src, dst)
        assert len(best) - 1 == nx.shortest_path_length(nx_graph, src, dst)


@pytest.mark.parametrize("seed", range(10))
def test_heuristics_never_beat_the_oracle(seed):
    graph = data_service.generate_powerlaw(120, 3, seed=seed, reciprocity=0.3)
    ratings = data_service.generate_ratings(graph, 150, seed=seed)
    for kind in ("indeg", "delta", "gamma"):
        weight_cfg = WeightConfig(kind=kind)
        weights = compute_weights(graph, weight_cfg, 3, ratings)
        scoring = scoring_config_for(graph, weight_cfg, 3, ratings)
        c_th = 1.0 if kind == "indeg" else 30.0
        oracle = build_inferred(graph, enumerate_all(graph, 3), scoring)
        h1 = build_inferred(graph, enumerate_paths(graph, EnumConfig(3, Method.H1, c_th), weights), scoring)
        h2 = build_inferred(graph, enumerate_paths(graph, EnumConfig(3, Method.H2, c_th), weights), scoring)

        for heuristic in (h1, h2):
            for src, dst, weight in heuristic.inferred_edges():
                assert weight <= oracle.weight(src, dst) + 1e-12
        score_h1, error_h1 = score_and_mean_error(oracle, h1)
        score_h2, error_h2 = score_and_mean_error(oracle, h2)
        assert score_h1 >= score_h2 >= 0.0
        assert error_h1 >= 0.0 and error_h2 >= 0.0


def test_gamma_scoring_needs_ratings(chain_graph):
    with pytest.raises(ValidationError):
        scoring_config_for(chain_graph, WeightConfig(kind="gamma"), 3)
