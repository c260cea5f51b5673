"""
Compare command.

Scores a pruned enumeration against the exhaustive oracle at the same L_max.
"""

import argparse
import os

from trustprop import config
from trustprop.commands.common import (add_dataset_args, add_inference_args, add_runtime_args,
                                       build_run_config, resolve_workers)
from trustprop.exceptions import TrustPropError
from trustprop.models import Method
from trustprop.services.sweep_service import COMPARISON_FILE, SweepService
from trustprop.utils.helpers import export_to_csv
from trustprop.utils.response_helpers import EXIT_INVALID, error_response, success_response


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("compare", help="Compare an h1/h2 inferred graph with the oracle")
    add_dataset_args(parser)
    add_inference_args(parser)
    add_runtime_args(parser)
    parser.add_argument("--no-cache", dest="no_cache", action="store_true",
                        help="Do not read or write the on-disk oracle cache")
    parser.set_defaults(handler=handle_compare)


def handle_compare(args: argparse.Namespace) -> int:
    try:
        cfg = build_run_config(args)
        if cfg.method is Method.ALL:
            return error_response("compare needs --method h1 or h2", EXIT_INVALID)
        service = SweepService(output_dir=cfg.output_dir, workers=resolve_workers(args),
                               cache_dir=None if args.no_cache else config.CACHE_DIR)
        result = service.run_config(cfg)
        path = export_to_csv([result.report.to_row()], os.path.join(cfg.output_dir, COMPARISON_FILE),
                             config.COMPARISON_COLUMNS)
        return success_response({"report": result.report.to_row(), "file": path})
    except (TrustPropError, ValueError, KeyError) as e:
        return error_response(f"Invalid comparison request: {str(e)}", EXIT_INVALID, type(e).__name__)
    except OSError as e:
        return error_response(f"Error comparing graphs: {str(e)}")
