"""
Graph comparison metrics.

Compares a heuristic inferred graph against the exhaustive (oracle) one.
"""

import logging
from typing import Tuple

from trustprop.exceptions import ValidationError
from trustprop.models import ComparisonReport, InferredGraph

logger = logging.getLogger(__name__)


def density(edge_count: int, node_count: int) -> float:
    """
    Fraction of possible directed edges present: |E| / (n (n - 1)).

    Raises:
        ValidationError: If fewer than two nodes
    """
    if node_count < 2:
        raise ValidationError(f"Density needs at least 2 nodes, got {node_count}")
    return edge_count / (node_count * (node_count - 1))


def edges_missed_pct(oracle_edges: int, heuristic_edges: int) -> float:
    """
    Percentage of the oracle's edges the heuristic graph lacks.

    Returns 0 when the oracle has no edges.
    """
    if heuristic_edges > oracle_edges:
        raise ValidationError(
            f"Heuristic graph has more edges ({heuristic_edges}) than the oracle ({oracle_edges})")
    if oracle_edges == 0:
        return 0.0
    return 100.0 * (oracle_edges - heuristic_edges) / oracle_edges


def score_and_mean_error(oracle: InferredGraph, heuristic: InferredGraph) -> Tuple[float, float]:
    """
    Share of suboptimal inferred edges and their average shortfall.

    Over the oracle's inferred edges, an edge is suboptimal when the
    heuristic's weight is strictly lower; an absent heuristic edge counts as
    weight 0.

    Args:
        oracle: Inferred graph from exhaustive enumeration
        heuristic: Inferred graph from a pruned enumeration

    Returns:
        (score percent, mean error over the suboptimal edges)

    Raises:
        ValidationError: If the graphs have different node sets
    """
    if oracle.node_count != heuristic.node_count:
        raise ValidationError(
            f"Node universes differ: {oracle.node_count} vs {heuristic.node_count}")

    total = 0
    suboptimal = 0
    shortfall = 0.0
    for src, dst, weight in oracle.inferred_edges():
        total += 1
        other = heuristic.weight(src, dst) if heuristic.has_edge(src, dst) else 0.0
        if other < weight:
            suboptimal += 1
            shortfall += weight - other

    if total == 0:
        return 0.0, 0.0
    score = 100.0 * suboptimal / total
    mean_error = shortfall / suboptimal if suboptimal else 0.0
    return score, mean_error


def compare_graphs(oracle: InferredGraph, heuristic: InferredGraph, method: str, weight: str,
                   l_max: int, duration_s: float, path_count: int) -> ComparisonReport:
    """Assemble one comparison row for ``heuristic`` against ``oracle``."""
    score, mean_error = score_and_mean_error(oracle, heuristic)
    report = ComparisonReport(
        method=method,
        weight=weight,
        l_max=l_max,
        duration_s=duration_s,
        path_count=path_count,
        edges=heuristic.edge_count,
        density=density(heuristic.edge_count, heuristic.node_count),
        edges_missed_pct=edges_missed_pct(oracle.edge_count, heuristic.edge_count),
        score_pct=score,
        mean_error=mean_error,
    )
    logger.info("%s/%s L_max=%d: missed %.4f%%, score %.4f%%, mean error %.4f",
                method, weight, l_max, report.edges_missed_pct, score, mean_error)
    return report
