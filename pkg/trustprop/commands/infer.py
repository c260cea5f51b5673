"""
Infer command.

Enumerates paths with the chosen method, builds the inferred trust graph and
writes it as an edge list.
"""

import argparse
import os
import time

from trustprop.commands.common import (add_dataset_args, add_inference_args, add_runtime_args,
                                       build_run_config, resolve_workers)
from trustprop.exceptions import TrustPropError
from trustprop.models import Method
from trustprop.services.data_service import data_service
from trustprop.services.inference_service import build_inferred, explain_pair, scoring_config_for
from trustprop.services.metrics_service import density
from trustprop.services.path_service import enumerate_paths
from trustprop.services.sweep_service import method_label
from trustprop.services.weight_service import compute_weights
from trustprop.utils.response_helpers import EXIT_INVALID, error_response, success_response


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("infer", help="Build the inferred trust graph")
    add_dataset_args(parser)
    add_inference_args(parser)
    add_runtime_args(parser)
    parser.add_argument("--out", help="Edge-list file (default <output-dir>/inferred-<run>-L<lmax>.tsv)")
    parser.add_argument("--explain", nargs=2, type=int, metavar=("SRC", "DST"),
                        help="Also report the best path for one pair (dense ids)")
    parser.set_defaults(handler=handle_infer)


def handle_infer(args: argparse.Namespace) -> int:
    """
    Run one inference and write the edge list.

    Returns:
        Process exit code
    """
    try:
        cfg = build_run_config(args)
        workers = resolve_workers(args)
        graph, ratings = data_service.load_for_run(cfg)
        weight_cfg = cfg.to_weight_config()

        started = time.perf_counter()
        weights = None
        if cfg.method is not Method.ALL:
            weights = compute_weights(graph, weight_cfg, cfg.l_max, ratings)
        index = enumerate_paths(graph, cfg.to_enum_config(), weights, workers=workers)
        scoring = scoring_config_for(graph, weight_cfg, cfg.l_max, ratings)
        inferred = build_inferred(graph, index, scoring)
        duration = time.perf_counter() - started

        out = args.out or os.path.join(cfg.output_dir, f"inferred-{method_label(cfg)}-L{cfg.l_max}.tsv")
        data_service.write_edge_list(inferred, out)
        result = {
            "config": cfg.to_dict(),
            "edges": inferred.edge_count,
            "inferred_edges": inferred.inferred_count,
            "path_count": index.path_count(),
            "density": density(inferred.edge_count, inferred.node_count),
            "duration_s": duration,
            "edge_list": out,
        }
        if args.explain:
            src, dst = args.explain
            score, path = explain_pair(index, scoring, src, dst)
            result["explain"] = {"src": src, "dst": dst, "trust": score, "path": list(path)}
        return success_response(result, f"Inferred graph written to {out}")
    except (TrustPropError, ValueError, KeyError) as e:
        return error_response(f"Invalid inference request: {str(e)}", EXIT_INVALID, type(e).__name__)
    except OSError as e:
        return error_response(f"Error running inference: {str(e)}")
