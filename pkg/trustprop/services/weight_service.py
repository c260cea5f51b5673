"""
Vertex weight service.

Computes the node-influence weights (theta) used both for threshold pruning
during enumeration and for the benefit term when scoring paths.
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from trustprop.exceptions import ValidationError
from trustprop.models import RatingTable, TrustGraph, WeightConfig, WeightKind

logger = logging.getLogger(__name__)

HEAVY = "H"
AVERAGE = "A"
COLD = "C"


def indegree_weights(graph: TrustGraph) -> List[float]:
    """theta_i = indeg(i) for every node."""
    return [float(d) for d in graph.indegrees()]


def delta_weights(graph: TrustGraph, q: float, epsilon: float = 0.0) -> List[float]:
    """
    Degree-of-trustworthiness of every node.

    delta_i = q * indeg(i) / (max indegree + epsilon), so every value lies in [0, q].

    Args:
        graph: Source graph
        q: Positive scale, at most 1/L_max for the run
        epsilon: Non-negative smoothing added to the denominator

    Returns:
        One delta value per node

    Raises:
        ValidationError: If the denominator is zero (no edges and epsilon = 0)
    """
    if epsilon < 0:
        raise ValidationError(f"epsilon must be non-negative, got {epsilon}")
    denominator = graph.max_indegree() + epsilon
    if denominator == 0:
        raise ValidationError("Degree-of-trustworthiness is undefined: graph has no edges and epsilon is 0")
    indeg = np.asarray(graph.indegrees(), dtype=float)
    return (q * indeg / denominator).tolist()


def categorize_items(ratings: RatingTable, cfg: WeightConfig) -> Dict[int, str]:
    """
    Split items into heavy, average and cold-start by rating count.

    Counts >= heavy_min_count are heavy, counts <= cold_max_count are cold and
    everything in between is average; both boundaries are inclusive.

    Returns:
        Item id mapped to "H", "A" or "C"
    """
    if not cfg.cold_max_count < cfg.heavy_min_count:
        raise ValidationError("cold-max-count must be below heavy-min-count")
    categories = {}
    for item, count in enumerate(ratings.item_rating_counts()):
        if count >= cfg.heavy_min_count:
            categories[item] = HEAVY
        elif count <= cfg.cold_max_count:
            categories[item] = COLD
        else:
            categories[item] = AVERAGE
    return categories


def gamma_weights(graph: TrustGraph, ratings: RatingTable, cfg: WeightConfig) -> List[float]:
    """
    Degree-of-TrustNPurchase of every node.

    gamma_i sums four ratios, each in [0, 1]: the user's heavy, average and
    cold-start item counts over the largest such count among all users, and
    the user's indegree over the maximum indegree. A ratio whose denominator
    is zero contributes 0.

    Args:
        graph: Source graph
        ratings: Ratings keyed by the same dense user ids
        cfg: Category thresholds

    Returns:
        One gamma value per node, each in [0, 4]
    """
    if ratings.user_count != graph.node_count:
        raise ValidationError(
            f"Rating table has {ratings.user_count} users but the graph has {graph.node_count} nodes")

    categories = categorize_items(ratings, cfg)
    columns = {HEAVY: 0, AVERAGE: 1, COLD: 2}
    counts = np.zeros((graph.node_count, 4), dtype=float)
    for user in graph.nodes():
        for item in ratings.user_ratings(user):
            counts[user, columns[categories[item]]] += 1
    counts[:, 3] = graph.indegrees()

    maxima = counts.max(axis=0) if graph.node_count else np.zeros(4)
    ratios = np.divide(counts, maxima, out=np.zeros_like(counts), where=maxima > 0)
    return ratios.sum(axis=1).tolist()


def compute_weights(graph: TrustGraph, cfg: WeightConfig, l_max: int,
                    ratings: Optional[RatingTable] = None) -> List[float]:
    """
    Dispatch to the weight function named by ``cfg.kind``.

    Raises:
        ValidationError: If gamma weights are requested without ratings
    """
    cfg.validate(l_max)
    if cfg.kind is WeightKind.INDEGREE:
        weights = indegree_weights(graph)
    elif cfg.kind is WeightKind.DELTA:
        weights = delta_weights(graph, cfg.resolved_q(l_max), cfg.epsilon)
    else:
        if ratings is None:
            raise ValidationError("gamma weights need a rating table")
        weights = gamma_weights(graph, ratings, cfg)
    logger.debug("Computed %s weights for %d nodes", cfg.kind.value, len(weights))
    return weights
