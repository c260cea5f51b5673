"""
Sweep command.

Runs a methods x weights x L_max grid, plus an optional alpha sensitivity
sweep, and writes the report CSVs.
"""

import argparse

from trustprop.commands.common import (add_dataset_args, add_inference_args, add_runtime_args,
                                       build_run_config, resolve_workers)
from trustprop.exceptions import SweepAbortedError, TrustPropError
from trustprop.models import expand_grid
from trustprop.services.sweep_service import SweepService
from trustprop.utils.response_helpers import EXIT_INVALID, error_response, success_response
from trustprop.utils.validators import validate_lists

EXIT_ABORTED = 3


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("sweep", help="Run an experiment grid and write reports")
    add_dataset_args(parser)
    add_inference_args(parser, with_method=False)
    add_runtime_args(parser)
    parser.add_argument("--methods", type=validate_lists.methods, default=["all", "h1", "h2"],
                        help="Comma-separated methods (default all,h1,h2)")
    parser.add_argument("--weights", type=validate_lists.weights, default=["indeg"],
                        help="Comma-separated weight kinds (default indeg)")
    parser.add_argument("--lmaxes", type=validate_lists.l_maxes, default=[2, 3],
                        help="Comma-separated L_max values (default 2,3)")
    parser.add_argument("--alphas", type=validate_lists.alphas, default=[],
                        help="Comma-separated percentiles for the alpha density sweep")
    parser.add_argument("--evaluate", action="store_true", help="Also run leave-one-out evaluation")
    parser.add_argument("--plots", action="store_true", help="Write PNG figures next to the CSVs")
    parser.set_defaults(handler=handle_sweep)


def handle_sweep(args: argparse.Namespace) -> int:
    """
    Run the grid.

    Returns:
        0 on success, 2 on invalid settings, 3 when the sweep was aborted
    """
    try:
        base = build_run_config(args).with_overrides(evaluate=args.evaluate)
        grid = expand_grid(base, args.methods, args.weights, args.lmaxes, args.alphas)
        for cfg in grid:
            cfg.validate()
        service = SweepService(output_dir=base.output_dir, workers=resolve_workers(args),
                               plots=args.plots)
        written = service.run_sweep(grid)
        return success_response({"runs": len(grid), "files": written},
                                f"Sweep finished: {len(grid)} runs")
    except SweepAbortedError as e:
        return error_response(str(e), EXIT_ABORTED, type(e).__name__)
    except (TrustPropError, ValueError, KeyError) as e:
        return error_response(f"Invalid sweep request: {str(e)}", EXIT_INVALID, type(e).__name__)
    except OSError as e:
        return error_response(f"Error running sweep: {str(e)}")
