"""
Evaluate command.

Leave-one-out rating prediction over an inferred trust graph, either built
for the run or read from an edge list written by ``infer``.
"""

import argparse
import os

from trustprop import config
from trustprop.commands.common import (add_dataset_args, add_inference_args, add_runtime_args,
                                       build_run_config, resolve_workers)
from trustprop.exceptions import TrustPropError
from trustprop.services.data_service import data_service
from trustprop.services.recommender_service import evaluate_loo
from trustprop.services.sweep_service import EVAL_FILE, SweepService, method_label
from trustprop.utils.helpers import export_to_csv
from trustprop.utils.response_helpers import EXIT_INVALID, error_response, success_response


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("evaluate", help="Leave-one-out MAE, RMSE and coverage")
    add_dataset_args(parser)
    add_inference_args(parser)
    add_runtime_args(parser)
    parser.add_argument("--edges", help="Inferred edge list to score instead of running inference")
    parser.set_defaults(handler=handle_evaluate)


def handle_evaluate(args: argparse.Namespace) -> int:
    try:
        cfg = build_run_config(args).with_overrides(evaluate=True)
        workers = resolve_workers(args)
        if args.edges:
            graph, ratings = data_service.load_for_run(cfg)
            inferred = data_service.read_edge_list(args.edges, graph.node_count, graph.labels)
            report = evaluate_loo(inferred, ratings, dataset=cfg.dataset, method=method_label(cfg),
                                  workers=workers)
        else:
            service = SweepService(output_dir=cfg.output_dir, workers=workers)
            report = service.run_config(cfg).evaluation
        row = report.to_row()
        path = export_to_csv([row], os.path.join(cfg.output_dir, EVAL_FILE), config.EVAL_COLUMNS)
        return success_response({"report": row, "unpredictable": report.unpredictable, "file": path})
    except (TrustPropError, ValueError, KeyError) as e:
        return error_response(f"Invalid evaluation request: {str(e)}", EXIT_INVALID, type(e).__name__)
    except OSError as e:
        return error_response(f"Error evaluating recommendations: {str(e)}")
