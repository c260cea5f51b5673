"""
Path enumeration service.

Discovers bounded-length simple paths between non-adjacent node pairs, either
exhaustively or with threshold pruning (H1), optionally recovering pairs the
pruning would lose (H2).
"""

import logging
import math
import time
from typing import List, Optional, Sequence, Tuple

import numpy as np

from trustprop.exceptions import ValidationError
from trustprop.models import CutoffKind, EnumConfig, Method, PathIndex, TrustGraph
from trustprop.models.path_index import Path
from trustprop.utils.helpers import chunked, run_parallel

logger = logging.getLogger(__name__)


def theta_cutoff(neighbor_weights: Sequence[float], c_th: float) -> float:
    """
    Mean-scaled cut-off: c_th times the mean weight of a node's successors.

    Args:
        neighbor_weights: Weights of the current node's successors (non-empty)
        c_th: Non-negative scale factor

    Returns:
        The cut-off value
    """
    if not neighbor_weights:
        raise ValidationError("Cut-off needs at least one neighbor weight")
    return c_th * sum(neighbor_weights) / len(neighbor_weights)


def alpha_cutoff(neighbor_weights: Sequence[float], alpha: float) -> float:
    """
    Nearest-rank alpha percentile of the successors' weights.

    The smallest weight whose empirical CDF reaches alpha/100, i.e. the element
    at 1-based rank ceil(alpha/100 * n) of the ascending sort.
    """
    if not neighbor_weights:
        raise ValidationError("Cut-off needs at least one neighbor weight")
    if not 0 < alpha < 100:
        raise ValidationError(f"alpha must lie in (0, 100), got {alpha}")
    return float(np.percentile(neighbor_weights, alpha, method="inverted_cdf"))


class _SourceExpander:
    """Depth-first expansion from one source at a time into a PathIndex."""

    def __init__(self, graph: TrustGraph, weights: Optional[Sequence[float]], cfg: EnumConfig):
        self.graph = graph
        self.weights = weights
        self.cfg = cfg
        self.prune = cfg.method is not Method.ALL
        self.recover = cfg.method is Method.H2
        self._source = -1
        self._index = PathIndex()

    def expand(self, source: int, index: PathIndex) -> None:
        self._source = source
        self._index = index
        # first hop is never thresholded
        for first in self.graph.successors(source):
            self._add_neighbor(first, self.cfg.l_max, (source, first))

    def _cutoff(self, successors: List[int]) -> float:
        values = [self.weights[s] for s in successors]
        if self.cfg.cutoff is CutoffKind.ALPHA:
            return alpha_cutoff(values, self.cfg.alpha)
        return theta_cutoff(values, self.cfg.c_th)

    def _passes(self, node: int, cutoff: float) -> bool:
        if self.cfg.cutoff is CutoffKind.ALPHA:
            return self.weights[node] > cutoff
        return self.weights[node] >= cutoff

    def _add_neighbor(self, current: int, budget: int, path: Path) -> None:
        if budget == 1:
            return
        successors = self.graph.successors(current)
        if not successors:
            return
        cutoff = self._cutoff(successors) if self.prune else None
        for nxt in successors:
            if nxt in path:
                continue
            extended = path + (nxt,)
            if not self.graph.has_edge(self._source, nxt):
                self._index.add(extended)
            if cutoff is None or self._passes(nxt, cutoff):
                self._add_neighbor(nxt, budget - 1, extended)
            elif self.recover:
                self._check_path(nxt, budget - 1, extended)

    def _check_path(self, current: int, budget: int, path: Path) -> None:
        # Records only pairs still absent; the direct-edge test gates recording, not recursion.
        if budget == 1:
            return
        for nxt in self.graph.successors(current):
            if nxt in path:
                continue
            extended = path + (nxt,)
            if not self.graph.has_edge(self._source, nxt):
                self._index.add_if_absent(extended)
            self._check_path(nxt, budget - 1, extended)


def _expand_sources(graph: TrustGraph, weights: Optional[Sequence[float]],
                    cfg: EnumConfig, sources: Sequence[int]) -> PathIndex:
    index = PathIndex()
    expander = _SourceExpander(graph, weights, cfg)
    for source in sources:
        expander.expand(source, index)
    return index


def _expand_chunk(args: Tuple[TrustGraph, Optional[Sequence[float]], EnumConfig, Sequence[int]]) -> PathIndex:
    return _expand_sources(*args)


def enumerate_paths(graph: TrustGraph, cfg: EnumConfig,
                    weights: Optional[Sequence[float]] = None,
                    workers: int = 1) -> PathIndex:
    """
    Build the PathIndex for ``cfg.method``.

    Sources are split into contiguous chunks; each worker fills a private index
    and the partial indices are merged in source order, so the result does
    not depend on scheduling.

    Args:
        graph: Source graph (not mutated)
        cfg: Enumeration settings
        weights: Node weights; required for h1 and h2
        workers: Worker processes; 1 runs inline

    Returns:
        The populated PathIndex

    Raises:
        ValidationError: On invalid settings or missing weights
    """
    cfg.validate()
    if cfg.method is not Method.ALL:
        if weights is None or len(weights) != graph.node_count:
            raise ValidationError("Pruned enumeration needs one weight per node")

    started = time.perf_counter()
    sources = list(graph.nodes())
    if workers <= 1 or len(sources) < 2:
        index = _expand_sources(graph, weights, cfg, sources)
    else:
        size = math.ceil(len(sources) / workers)
        tasks = [(graph, weights, cfg, chunk) for chunk in chunked(sources, size)]
        index = PathIndex()
        for partial in run_parallel(_expand_chunk, tasks, workers):
            index.merge(partial)

    logger.info("Enumerated %s paths (L_max=%d): %d pairs, %d paths in %.2fs",
                cfg.method.value, cfg.l_max, index.pair_count(), index.path_count(),
                time.perf_counter() - started)
    return index


def enumerate_all(graph: TrustGraph, l_max: int, workers: int = 1) -> PathIndex:
    """Every simple path of length 2..L_max between non-adjacent ordered pairs."""
    return enumerate_paths(graph, EnumConfig(l_max=l_max, method=Method.ALL), workers=workers)


def enumerate_h1(graph: TrustGraph, weights: Sequence[float], cfg: EnumConfig,
                 workers: int = 1) -> PathIndex:
    """
    Threshold-pruned enumeration.

    A node is expanded further only if its weight clears the cut-off computed
    from its parent's successors; every visited successor is still recorded.
    """
    if cfg.method is not Method.H1:
        raise ValidationError(f"enumerate_h1 called with method {cfg.method.value}")
    return enumerate_paths(graph, cfg, weights, workers)


def enumerate_h2(graph: TrustGraph, weights: Sequence[float], cfg: EnumConfig,
                 workers: int = 1) -> PathIndex:
    """
    Threshold-pruned enumeration that still reaches every pair the exhaustive
    search reaches, keeping only the first path found through pruned nodes.
    """
    if cfg.method is not Method.H2:
        raise ValidationError(f"enumerate_h2 called with method {cfg.method.value}")
    return enumerate_paths(graph, cfg, weights, workers)
