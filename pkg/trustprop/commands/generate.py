"""
Generate command.

Writes a seeded synthetic power-law trust network with long-tail ratings in
the dataset directory layout.
"""

import argparse

from trustprop import config
from trustprop.exceptions import TrustPropError
from trustprop.services.data_service import data_service
from trustprop.utils.response_helpers import EXIT_INVALID, error_response, success_response
from trustprop.utils.validators import validate_args


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("generate", help="Generate a synthetic power-law dataset")
    parser.add_argument("--out", required=True, help="Directory for the dataset")
    parser.add_argument("--nodes", type=validate_args.positive_int, default=500, help="Number of users")
    parser.add_argument("--m", type=validate_args.positive_int, default=3, help="Trust ties per new user")
    parser.add_argument("--reciprocity", type=float, default=0.0, help="Probability a tie is returned")
    parser.add_argument("--items", type=validate_args.positive_int, help="Number of items (default 2x nodes)")
    parser.add_argument("--ratings-per-user", dest="ratings_per_user", type=float, default=8.0,
                        help="Mean ratings per user")
    parser.add_argument("--scale", type=validate_args.scale, default=(1.0, 5.0), help="Rating scale as low,high")
    parser.add_argument("--seed", type=int, default=config.SEED, help="Random seed")
    parser.set_defaults(handler=handle_generate)


def handle_generate(args: argparse.Namespace) -> int:
    try:
        graph = data_service.generate_powerlaw(args.nodes, args.m, seed=args.seed,
                                               reciprocity=args.reciprocity)
        ratings = data_service.generate_ratings(graph, args.items or 2 * args.nodes,
                                                mean_per_user=args.ratings_per_user,
                                                seed=args.seed, scale=args.scale)
        paths = data_service.write_dataset(graph, ratings, args.out)
        return success_response({"counts": data_service.dataset_counts(graph, ratings), "files": paths},
                                f"Synthetic dataset written to {args.out}")
    except (TrustPropError, ValueError) as e:
        return error_response(f"Invalid generator settings: {str(e)}", EXIT_INVALID, type(e).__name__)
    except OSError as e:
        return error_response(f"Error writing dataset: {str(e)}")
