import pytest

from trustprop.exceptions import CorruptIndexError, UnknownNodeError, ValidationError
from trustprop.models import InferredGraph, PathIndex, RatingTable, TrustGraph, path_count

from conftest import build_graph, random_digraph


def test_add_edge_updates_indegree():
    graph = TrustGraph(3)
    graph.add_edge(0, 1, 0.5)
    assert graph.edge_count == 1
    assert graph.indegree(1) == 1
    assert graph.weight(0, 1) == 0.5


def test_add_edge_overwrites_weight():
    graph = TrustGraph(3)
    graph.add_edge(0, 1, 0.5)
    graph.add_edge(0, 1, 0.9)
    assert graph.edge_count == 1
    assert graph.indegree(1) == 1
    assert graph.weight(0, 1) == 0.9


@pytest.mark.parametrize("src, dst, weight", [(0, 0, 0.5), (0, 1, 1.5), (0, 1, -0.1)])
def test_add_edge_rejects_invalid(src, dst, weight):
    graph = TrustGraph(3)
    with pytest.raises(ValidationError):
        graph.add_edge(src, dst, weight)


def test_add_edge_unknown_node():
    graph = TrustGraph(3)
    with pytest.raises(UnknownNodeError):
        graph.add_edge(0, 3, 0.5)


def test_successors_sorted_and_stable():
    graph = TrustGraph(4)
    graph.add_edge(0, 2, 1.0)
    graph.add_edge(0, 1, 1.0)
    assert graph.successors(0) == [1, 2]
    assert graph.successors(0) == [1, 2]
    assert graph.successors(3) == []

    star = build_graph(4, [(0, 3), (0, 1), (0, 2)])
    assert star.successors(0) == [1, 2, 3]


def test_successors_unknown_node():
    with pytest.raises(UnknownNodeError):
        TrustGraph(2).successors(5)


def test_has_edge_unknown_node():
    graph = build_graph(2, [(0, 1)])
    assert graph.has_edge(0, 1)
    assert not graph.has_edge(1, 0)
    with pytest.raises(UnknownNodeError):
        graph.has_edge(5, 0)
    with pytest.raises(UnknownNodeError):
        graph.has_edge(0, 5)


def test_remove_edge_keeps_caches_exact():
    graph = build_graph(3, [(0, 1), (2, 1), (0, 2)])
    graph.remove_edge(2, 1)
    assert graph.indegree(1) == 1
    assert graph.successors(2) == []
    graph.validate()


def test_validator_after_random_mutations():
    graph = random_digraph(40, 3.0, seed=11)
    for src, dst, _ in list(graph.edges())[::3]:
        graph.remove_edge(src, dst)
    for src, dst, _ in list(graph.edges())[::5]:
        graph.add_edge(src, dst, 0.25)
    graph.validate()
    assert sum(graph.indegrees()) == graph.edge_count


def test_node_weights():
    graph = TrustGraph(3)
    graph.set_node_weights([0.0, 1.5, 2.0])
    assert graph.node_weight(1) == 1.5
    with pytest.raises(ValidationError):
        graph.set_node_weights([0.0, -1.0, 2.0])
    with pytest.raises(ValidationError):
        graph.set_node_weights([0.0])


def test_inferred_graph_provenance(diamond_graph):
    inferred = InferredGraph.from_graph(diamond_graph)
    inferred.add_inferred_edge(0, 3, 0.7)
    assert inferred.provenance(0, 1) == InferredGraph.ORIGINAL
    assert inferred.provenance(0, 3) == InferredGraph.INFERRED
    assert list(inferred.inferred_edges()) == [(0, 3, 0.7)]
    assert inferred.edge_count == diamond_graph.edge_count + 1
    inferred.validate()

    with pytest.raises(ValidationError):
        inferred.add_inferred_edge(0, 1, 0.5)
    with pytest.raises(ValidationError):
        inferred.add_inferred_edge(1, 2, 0.0)


def test_inferred_copy_is_independent(diamond_graph):
    inferred = InferredGraph.from_graph(diamond_graph)
    clone = inferred.copy()
    clone.add_inferred_edge(0, 3, 0.5)
    assert not inferred.has_edge(0, 3)
    assert diamond_graph.edge_count == 4


def test_path_count():
    index = PathIndex()
    assert path_count(index) == 0
    index.add((0, 1, 2))
    index.add((0, 4, 2))
    index.add((0, 1, 3))
    assert path_count(index) == 3
    assert index.pair_count() == 2


def test_add_if_absent_keeps_first():
    index = PathIndex()
    assert index.add_if_absent((0, 1, 2))
    assert not index.add_if_absent((0, 3, 2))
    assert index.paths(0, 2) == [(0, 1, 2)]


def test_path_index_validator(chain_graph):
    index = PathIndex()
    index.add((0, 1, 2))
    index.validate(chain_graph, 3)

    bad_edge = PathIndex()
    bad_edge.add((0, 2, 3))
    with pytest.raises(CorruptIndexError):
        bad_edge.validate(chain_graph, 3)

    direct = PathIndex()
    direct.add((0, 1))
    with pytest.raises(CorruptIndexError):
        direct.validate(chain_graph, 3)

    too_long = PathIndex()
    too_long.add((0, 1, 2, 3))
    with pytest.raises(CorruptIndexError):
        too_long.validate(chain_graph, 2)


def test_path_index_to_lines_sorted():
    index = PathIndex()
    index.add((1, 2, 3))
    index.add((0, 1, 2))
    assert index.to_lines() == ["0 1 2", "1 2 3"]


def test_rating_table_means_are_exact():
    ratings = RatingTable(2, 3, scale=(0.5, 4.0))
    ratings.add_rating(0, 0, 1.0)
    ratings.add_rating(0, 1, 2.0)
    ratings.add_rating(0, 2, 4.0)
    assert ratings.user_mean(0) == pytest.approx(7.0 / 3.0)
    assert ratings.user_mean(0, exclude_item=2) == pytest.approx(1.5)
    ratings.add_rating(0, 2, 3.0)
    assert ratings.user_mean(0) == pytest.approx(2.0)
    ratings.remove_rating(0, 0)
    assert ratings.user_mean(0) == pytest.approx(2.5)
    assert ratings.user_mean(1) is None
    assert ratings.global_mean == pytest.approx(2.5)
    assert ratings.item_rating_counts() == [0, 1, 1]
    ratings.validate()


def test_rating_table_rejects_out_of_scale():
    ratings = RatingTable(1, 1, scale=(0.5, 4.0))
    with pytest.raises(ValidationError):
        ratings.add_rating(0, 0, 5.0)
    with pytest.raises(UnknownNodeError):
        ratings.add_rating(0, 3, 1.0)


def test_single_rating_mean_excluding_it_is_none():
    ratings = RatingTable(1, 1)
    ratings.add_rating(0, 0, 3.0)
    assert ratings.user_mean(0, exclude_item=0) is None
