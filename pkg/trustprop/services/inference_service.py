"""
Trust inference service.

Scores every stored path with a length penalty and an influence benefit, and
keeps the best score per pair as an inferred edge.
"""

import logging
import math
from typing import Optional, Sequence, Tuple

from trustprop.exceptions import ValidationError
from trustprop.models import (BenefitKind, InferredGraph, PathIndex, RatingTable,
                              ScoringConfig, TrustGraph, WeightConfig, WeightKind)
from trustprop.models.path_index import Path
from trustprop.services.weight_service import delta_weights, gamma_weights

logger = logging.getLogger(__name__)


def penalty(length: int, l_max: int) -> float:
    """
    Linear length penalty (l - 1) / L_max.

    Raises:
        ValidationError: If length is outside [2, L_max]
    """
    if not 2 <= length <= l_max:
        raise ValidationError(f"Path length {length} outside [2, {l_max}]")
    return (length - 1) / l_max


def benefit_delta(intermediates: Sequence[int], delta: Sequence[float]) -> float:
    """Sum of degree-of-trustworthiness over the intermediate nodes."""
    return sum(delta[node] for node in intermediates)


def sigmoid(value: float) -> float:
    return 1.0 / (1.0 + math.exp(-value))


def benefit_gamma(intermediates: Sequence[int], gamma: Sequence[float], l_max: int) -> float:
    """sigmoid(sum of gamma over intermediates) / L_max, always in (0, 1/L_max)."""
    return sigmoid(sum(gamma[node] for node in intermediates)) / l_max


def score_path(path: Path, cfg: ScoringConfig) -> float:
    """
    Candidate trust of a single path: 1 - penalty(length) + benefit(intermediates).

    Args:
        path: Node sequence from truster to trustee
        cfg: Scoring settings

    Returns:
        Candidate trust value
    """
    length = len(path) - 1
    gain = 1.0 - penalty(length, cfg.l_max)
    intermediates = path[1:-1]
    if cfg.benefit is BenefitKind.DELTA_SUM:
        return gain + benefit_delta(intermediates, cfg.benefit_weights)
    if cfg.benefit is BenefitKind.GAMMA_SIGMOID:
        return gain + benefit_gamma(intermediates, cfg.benefit_weights, cfg.l_max)
    return gain


def scoring_config_for(graph: TrustGraph, weight_cfg: WeightConfig, l_max: int,
                       ratings: Optional[RatingTable] = None) -> ScoringConfig:
    """
    Pair a weight kind with its benefit.

    Indegree and delta weights both score with the delta sum (delta computed
    with the configured q and epsilon); gamma weights score with the sigmoid
    of the gamma sum.
    """
    weight_cfg.validate(l_max)
    if weight_cfg.kind is WeightKind.GAMMA:
        if ratings is None:
            raise ValidationError("gamma scoring needs a rating table")
        return ScoringConfig(l_max=l_max, benefit=BenefitKind.GAMMA_SIGMOID,
                             benefit_weights=gamma_weights(graph, ratings, weight_cfg))
    if graph.edge_count == 0 and weight_cfg.epsilon == 0:
        # no edges means no paths, so the benefit is never read
        benefit = [0.0] * graph.node_count
    else:
        benefit = delta_weights(graph, weight_cfg.resolved_q(l_max), weight_cfg.epsilon)
    return ScoringConfig(l_max=l_max, benefit=BenefitKind.DELTA_SUM, benefit_weights=benefit)


def best_path_score(paths: Sequence[Path], cfg: ScoringConfig) -> Tuple[float, Path]:
    """Maximum score over ``paths`` and the lexicographically smallest path reaching it."""
    best_score = -math.inf
    best_path: Path = ()
    for path in paths:
        candidate = score_path(path, cfg)
        if candidate > best_score or (candidate == best_score and path < best_path):
            best_score, best_path = candidate, path
    return best_score, best_path


def build_inferred(graph: TrustGraph, index: PathIndex, cfg: ScoringConfig,
                   validate: bool = True) -> InferredGraph:
    """
    Create the inferred graph from a path index.

    The result starts as a copy of ``graph``; each indexed pair gains one
    inferred edge whose weight is the maximum path score for that pair.

    Args:
        graph: Graph the index was built from
        index: Discovered paths
        cfg: Scoring settings
        validate: Check every entry against the graph before scoring

    Returns:
        The inferred graph

    Raises:
        CorruptIndexError: If an entry violates the PathIndex invariants
    """
    if cfg.benefit is not BenefitKind.NONE and len(index) and \
            len(cfg.benefit_weights) != graph.node_count:
        raise ValidationError("Benefit weights must cover every node")

    inferred = InferredGraph.from_graph(graph)
    for (src, dst), paths in sorted(index.items()):
        if validate:
            PathIndex.validate_entry(graph, cfg.l_max, src, dst, paths)
        trust = max(score_path(path, cfg) for path in paths)
        assert 0.0 < trust <= 1.0 + 1e-12, f"inferred trust {trust} for <{src},{dst}> out of range"
        # min() only absorbs float rounding at the upper bound
        inferred.add_inferred_edge(src, dst, min(trust, 1.0))

    logger.info("Inferred graph: %d original + %d inferred edges",
                graph.edge_count, inferred.inferred_count)
    return inferred


def explain_pair(index: PathIndex, cfg: ScoringConfig, src: int, dst: int) -> Tuple[float, Path]:
    """
    Report the inferred trust for one pair and the path it comes from.

    Raises:
        ValidationError: If the pair is not in the index
    """
    paths = index.paths(src, dst)
    if not paths:
        raise ValidationError(f"No indexed paths for <{src},{dst}>")
    return best_path_score(paths, cfg)
