"""
Experiment sweep service.

Runs grids of RunConfigs: enumerate, infer, compare against the cached
exhaustive oracle, optionally evaluate recommendations, and write the
comparison, evaluation and alpha-density reports.
"""

import logging
import os
import pickle
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import pandas as pd

from trustprop import config
from trustprop.exceptions import SweepAbortedError
from trustprop.models import (ComparisonReport, CutoffKind, EvalReport, InferredGraph, Method,
                              PathIndex, RatingTable, RunConfig, TrustGraph)
from trustprop.services.data_service import RATING_FILE, TRUST_FILE, data_service
from trustprop.services.inference_service import build_inferred, scoring_config_for
from trustprop.services.metrics_service import compare_graphs, density
from trustprop.services.path_service import enumerate_all, enumerate_paths
from trustprop.services.recommender_service import evaluate_loo
from trustprop.services.weight_service import compute_weights
from trustprop.utils.helpers import export_to_csv, file_fingerprint
from trustprop.utils.plotting import plot_alpha_density, plot_metric_vs_lmax

logger = logging.getLogger(__name__)

COMPARISON_FILE = "comparison.csv"
EVAL_FILE = "evaluation.csv"
ALPHA_FILE = "alpha_density.csv"


@dataclass
class RunResult:
    """Everything one configuration produced."""

    config: RunConfig
    index: PathIndex
    inferred: InferredGraph
    duration_s: float
    report: Optional[ComparisonReport] = None
    evaluation: Optional[EvalReport] = None


def method_label(cfg: RunConfig) -> str:
    """Run label such as ``all-gamma`` or ``h1-Th-indeg`` (``h1-alpha70`` for percentile cut-offs)."""
    if cfg.method is Method.ALL:
        return f"{Method.ALL.value}-{cfg.weight.value}"
    if cfg.cutoff is CutoffKind.ALPHA:
        return f"{cfg.method.value}-alpha{cfg.alpha:g}"
    return f"{cfg.method.value}-Th-{cfg.weight.value}"


class SweepService:
    """Service class that runs configurations and keeps the oracle cache."""

    def __init__(self, output_dir: str = config.OUTPUT_DIR, cache_dir: Optional[str] = config.CACHE_DIR,
                 workers: int = config.WORKERS, plots: bool = False):
        """
        Args:
            output_dir: Directory for report files
            cache_dir: Directory for pickled oracle indices; None disables the disk cache
            workers: Worker processes for enumeration and evaluation
            plots: Also write figures next to the CSVs
        """
        self.output_dir = output_dir
        self.cache_dir = cache_dir
        self.workers = workers
        self.plots = plots
        self._datasets: Dict[Tuple, Tuple[TrustGraph, RatingTable, str]] = {}
        self._oracles: Dict[Tuple[str, int], Tuple[PathIndex, float]] = {}

    def load(self, cfg: RunConfig) -> Tuple[TrustGraph, RatingTable, str]:
        """Load the config's dataset once per (source, user_cap, seed, scale)."""
        key = (cfg.dataset_dir, cfg.trust_file, cfg.rating_file, cfg.user_cap, cfg.seed, cfg.scale)
        if key not in self._datasets:
            graph, ratings = data_service.load_for_run(cfg)
            if cfg.dataset_dir:
                fingerprint = file_fingerprint(os.path.join(cfg.dataset_dir, TRUST_FILE),
                                               os.path.join(cfg.dataset_dir, RATING_FILE))
            else:
                fingerprint = file_fingerprint(cfg.trust_file, cfg.rating_file)
                if cfg.user_cap is not None:
                    fingerprint += f"-cap{cfg.user_cap}-seed{cfg.seed}"
            self._datasets[key] = (graph, ratings, fingerprint)
        return self._datasets[key]

    def oracle_index(self, graph: TrustGraph, fingerprint: str, l_max: int) -> Tuple[PathIndex, float]:
        """
        Exhaustive PathIndex for (dataset, L_max), computed on demand.

        Cached in memory and, when a cache directory is set, pickled to disk.

        Returns:
            Tuple of (index, enumeration seconds when it was computed)
        """
        key = (fingerprint, l_max)
        if key in self._oracles:
            return self._oracles[key]

        path = None
        if self.cache_dir:
            path = os.path.join(self.cache_dir, f"oracle-{fingerprint}-L{l_max}.pkl")
            if os.path.exists(path):
                with open(path, "rb") as handle:
                    self._oracles[key] = pickle.load(handle)
                logger.info("Loaded cached oracle index %s", path)
                return self._oracles[key]

        started = time.perf_counter()
        index = enumerate_all(graph, l_max, workers=self.workers)
        entry = (index, time.perf_counter() - started)
        self._oracles[key] = entry
        if path:
            os.makedirs(self.cache_dir, exist_ok=True)
            with open(path, "wb") as handle:
                pickle.dump(entry, handle)
        return entry

    def run_config(self, cfg: RunConfig) -> RunResult:
        """Enumerate, infer, compare against the oracle and optionally evaluate one config."""
        cfg.validate()
        graph, ratings, fingerprint = self.load(cfg)
        weight_cfg = cfg.to_weight_config()
        scoring = scoring_config_for(graph, weight_cfg, cfg.l_max, ratings)

        started = time.perf_counter()
        if cfg.method is Method.ALL:
            index, enum_seconds = self.oracle_index(graph, fingerprint, cfg.l_max)
        else:
            weights = compute_weights(graph, weight_cfg, cfg.l_max, ratings)
            index = enumerate_paths(graph, cfg.to_enum_config(), weights, workers=self.workers)
            enum_seconds = time.perf_counter() - started
        build_started = time.perf_counter()
        inferred = build_inferred(graph, index, scoring)
        duration = enum_seconds + time.perf_counter() - build_started

        if cfg.method is Method.ALL:
            report = ComparisonReport(method=Method.ALL.value, weight=cfg.weight.value, l_max=cfg.l_max,
                                      duration_s=duration, path_count=index.path_count(),
                                      edges=inferred.edge_count,
                                      density=density(inferred.edge_count, inferred.node_count))
        else:
            oracle_index, _ = self.oracle_index(graph, fingerprint, cfg.l_max)
            oracle = build_inferred(graph, oracle_index, scoring, validate=False)
            report = compare_graphs(oracle, inferred, cfg.method.value, cfg.weight.value,
                                    cfg.l_max, duration, index.path_count())

        evaluation = None
        if cfg.evaluate:
            evaluation = evaluate_loo(inferred, ratings, dataset=cfg.dataset,
                                      method=method_label(cfg), workers=self.workers)
        return RunResult(cfg, index, inferred, duration, report, evaluation)

    def run_sweep(self, configs: List[RunConfig]) -> Dict[str, str]:
        """
        Run every config and write the report CSVs after each one.

        Returns:
            Mapping of report name to written path (empty for an empty grid)

        Raises:
            SweepAbortedError: If memory runs out; rows finished so far are on disk
        """
        comparison: List[ComparisonReport] = []
        evaluations: List[EvalReport] = []
        alpha_rows: List[Dict] = []
        written: Dict[str, str] = {}

        for position, cfg in enumerate(configs, start=1):
            logger.info("Run %d/%d: %s L_max=%d", position, len(configs), method_label(cfg), cfg.l_max)
            try:
                result = self.run_config(cfg)
            except MemoryError as exc:
                self._flush(comparison, evaluations, alpha_rows, written)
                raise SweepAbortedError(
                    f"Out of memory at run {position} ({method_label(cfg)}, L_max={cfg.l_max}); "
                    f"partial reports in {self.output_dir}") from exc

            if cfg.cutoff is CutoffKind.ALPHA:
                alpha_rows.append({"alpha": cfg.alpha, "l_max": cfg.l_max, "weight": cfg.weight.value,
                                   "edges": result.inferred.edge_count, "density": result.report.density})
            else:
                comparison.append(result.report)
            if result.evaluation is not None:
                evaluations.append(result.evaluation)
            self._flush(comparison, evaluations, alpha_rows, written)

        if self.plots:
            self._plot(comparison, alpha_rows, written)
        return written

    def check_filmtrust_reproduction(self, trust_file: str, rating_file: str) -> Dict:
        """
        Compare an ingested FilmTrust snapshot with the published counts.

        The all-path L_max=3 edge and path counts are only checked when the
        filtered dataset matches the published user/item/rating/tie counts.

        Returns:
            Dict with ``status`` (passed, failed or skipped) and the counts seen
        """
        graph, ratings = data_service.ingest(trust_file, rating_file,
                                             scale=config.RATING_SCALES["filmtrust"])
        counts = data_service.dataset_counts(graph, ratings)
        if counts != config.FILMTRUST_COUNTS:
            logger.warning("FilmTrust reproduction skipped: ingested counts %s differ from %s",
                           counts, config.FILMTRUST_COUNTS)
            return {"status": "skipped", "counts": counts}

        index = enumerate_all(graph, 3, workers=self.workers)
        observed = {"edges": graph.edge_count + index.pair_count(), "path_count": index.path_count()}
        status = "passed" if observed == config.FILMTRUST_ALLPATH_L3 else "failed"
        return {"status": status, "counts": counts, "observed": observed,
                "expected": config.FILMTRUST_ALLPATH_L3}

    def _flush(self, comparison: List[ComparisonReport], evaluations: List[EvalReport],
               alpha_rows: List[Dict], written: Dict[str, str]) -> None:
        if comparison:
            written["comparison"] = export_to_csv(
                [r.to_row() for r in comparison], os.path.join(self.output_dir, COMPARISON_FILE),
                config.COMPARISON_COLUMNS)
        if evaluations:
            written["evaluation"] = export_to_csv(
                [r.to_row() for r in evaluations], os.path.join(self.output_dir, EVAL_FILE),
                config.EVAL_COLUMNS)
        if alpha_rows:
            written["alpha_density"] = export_to_csv(
                alpha_rows, os.path.join(self.output_dir, ALPHA_FILE), config.ALPHA_COLUMNS)

    def _plot(self, comparison: List[ComparisonReport], alpha_rows: List[Dict],
              written: Dict[str, str]) -> None:
        if alpha_rows:
            written["alpha_plot"] = plot_alpha_density(
                pd.DataFrame(alpha_rows), os.path.join(self.output_dir, "alpha_density.png"))
        if not comparison:
            return
        table = pd.DataFrame([r.to_row() for r in comparison])
        written["path_count_plot"] = plot_metric_vs_lmax(
            table, "path_count", os.path.join(self.output_dir, "path_count_vs_lmax.png"),
            include_all=True, log_scale=True)
        written["density_plot"] = plot_metric_vs_lmax(
            table, "density", os.path.join(self.output_dir, "density_vs_lmax.png"), include_all=True)
        if any(r.method != Method.ALL.value for r in comparison):
            written["score_plot"] = plot_metric_vs_lmax(
                table, "score_pct", os.path.join(self.output_dir, "score_vs_lmax.png"))
            written["mean_error_plot"] = plot_metric_vs_lmax(
                table, "mean_error", os.path.join(self.output_dir, "mean_error_vs_lmax.png"))


def read_comparison_reports(filepath: str) -> List[ComparisonReport]:
    """Parse a comparison CSV written by the sweep."""
    df = pd.read_csv(filepath, dtype={"method": str, "weight": str})
    return [ComparisonReport.from_row(row) for row in df.to_dict(orient="records")]
