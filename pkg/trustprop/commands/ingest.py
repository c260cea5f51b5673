"""
Ingest command.

Filters raw trust/rating files and writes the dense-id dataset directory.
"""

import argparse

from trustprop import config
from trustprop.exceptions import TrustPropError
from trustprop.services.data_service import data_service
from trustprop.services.sweep_service import SweepService
from trustprop.utils.response_helpers import EXIT_INVALID, error_response, success_response
from trustprop.utils.validators import validate_args


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("ingest", help="Filter raw dataset files into a dense-id dataset")
    parser.add_argument("trust", help="Trust file: truster trustee [weight]")
    parser.add_argument("ratings", help="Rating file: user item rating")
    parser.add_argument("--out", required=True, help="Directory for the filtered dataset")
    parser.add_argument("--dataset", help="filmtrust or epinions selects the rating scale")
    parser.add_argument("--scale", type=validate_args.scale, help="Rating scale as low,high")
    parser.add_argument("--user-cap", dest="user_cap", type=validate_args.positive_int,
                        help="Uniform random user subsample before filtering")
    parser.add_argument("--seed", type=int, default=config.SEED, help="Subsample seed")
    parser.add_argument("--check-filmtrust", dest="check_filmtrust", action="store_true",
                        help="Also run the FilmTrust all-path reproduction check")
    parser.set_defaults(handler=handle_ingest)


def handle_ingest(args: argparse.Namespace) -> int:
    """
    Ingest and write the dataset.

    Returns:
        Process exit code
    """
    try:
        scale = args.scale or config.RATING_SCALES.get(args.dataset)
        graph, ratings = data_service.ingest(args.trust, args.ratings, user_cap=args.user_cap,
                                             seed=args.seed, scale=scale)
        paths = data_service.write_dataset(graph, ratings, args.out)
        result = {"counts": data_service.dataset_counts(graph, ratings), "files": paths}
        if args.check_filmtrust:
            result["filmtrust_check"] = SweepService().check_filmtrust_reproduction(args.trust, args.ratings)
        return success_response(result, f"Dataset written to {args.out}")
    except (TrustPropError, ValueError) as e:
        return error_response(f"Invalid dataset: {str(e)}", EXIT_INVALID, type(e).__name__)
    except OSError as e:
        return error_response(f"Error ingesting dataset: {str(e)}")
