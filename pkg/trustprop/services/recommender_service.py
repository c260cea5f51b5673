"""
Trust-aware recommender service.

Memory-based rating prediction in which trust weights from the inferred
graph replace user-user similarity, plus leave-one-out evaluation.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sklearn.metrics import mean_absolute_error, mean_squared_error

from trustprop.exceptions import ValidationError
from trustprop.models import EvalReport, RatingTable, TrustGraph
from trustprop.utils.helpers import chunked, run_parallel

logger = logging.getLogger(__name__)

RatingKey = Tuple[int, int]


def predict_rating(user: int, item: int, graph: TrustGraph, ratings: RatingTable,
                   held_out: Optional[RatingKey] = None) -> Optional[float]:
    """
    Predict ``user``'s rating of ``item`` from trusted out-neighbors.

    r_hat = mean(user) + sum_k t_uk (r_kj - mean(k)) / sum_k t_uk over
    out-neighbors k that rated the item. The held-out rating, if any, is left
    out of the user's mean and out of every contribution. The result is
    clipped to the rating scale.

    Args:
        user: Target user (graph node id)
        item: Target item id
        graph: Inferred trust graph
        ratings: Rating table sharing the graph's user ids
        held_out: (user, item) key of the hidden rating

    Returns:
        The prediction, or None when no neighbor contributes or the trust
        weights sum to zero

    Raises:
        UnknownNodeError: If user or item does not exist
    """
    raters = ratings.item_raters(item)
    neighbors = graph.successors(user)
    exclude = held_out[1] if held_out is not None and held_out[0] == user else None
    own_mean = ratings.user_mean(user, exclude_item=exclude)
    if own_mean is None:
        return None

    numerator = 0.0
    denominator = 0.0
    for neighbor in neighbors:
        if neighbor not in raters or (neighbor, item) == held_out:
            continue
        trust = graph.weight(user, neighbor)
        numerator += trust * (raters[neighbor] - ratings.user_mean(neighbor))
        denominator += trust

    if denominator == 0.0:
        return None
    low, high = ratings.scale
    return float(np.clip(own_mean + numerator / denominator, low, high))


def _predict_chunk(args: Tuple[TrustGraph, RatingTable, Sequence[Tuple[int, int, float]]]
                   ) -> List[Optional[float]]:
    graph, ratings, chunk = args
    return [predict_rating(user, item, graph, ratings, held_out=(user, item))
            for user, item, _ in chunk]


def evaluate_loo(graph: TrustGraph, ratings: RatingTable, dataset: str = "dataset",
                 method: str = "all", workers: int = 1) -> EvalReport:
    """
    Leave-one-out evaluation over every stored rating.

    Each rating is hidden and predicted; unpredictable ratings are replaced
    with the global mean and counted. MAE and RMSE run over all ratings.

    Args:
        graph: Inferred trust graph
        ratings: Ratings to hide one at a time
        dataset: Dataset label for the report
        method: Method label for the report
        workers: Worker processes

    Returns:
        The evaluation report

    Raises:
        ValidationError: If there are no ratings
    """
    if graph.node_count != ratings.user_count:
        raise ValidationError(
            f"Graph has {graph.node_count} nodes but the rating table has {ratings.user_count} users")
    entries = list(ratings.ratings())
    if not entries:
        raise ValidationError("Leave-one-out evaluation needs at least one rating")

    size = math.ceil(len(entries) / max(1, workers))
    tasks = [(graph, ratings, chunk) for chunk in chunked(entries, size)]
    predictions = [p for part in run_parallel(_predict_chunk, tasks, workers) for p in part]

    fallback = ratings.global_mean
    unpredictable = sum(1 for p in predictions if p is None)
    y_true = np.array([value for _, _, value in entries])
    y_pred = np.array([fallback if p is None else p for p in predictions])

    mae = float(mean_absolute_error(y_true, y_pred))
    rmse = float(math.sqrt(mean_squared_error(y_true, y_pred)))
    coverage = 100.0 * (1.0 - unpredictable / len(entries))
    logger.info("LOO %s/%s: MAE %.4f, RMSE %.4f, coverage %.2f%% (%d/%d unpredictable)",
                dataset, method, mae, rmse, coverage, unpredictable, len(entries))
    return EvalReport(dataset=dataset, method=method, mae=mae, rmse=rmse,
                      coverage_pct=coverage, total_ratings=len(entries),
                      unpredictable=unpredictable)
