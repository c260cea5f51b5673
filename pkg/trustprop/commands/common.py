"""
Shared argument groups and RunConfig assembly for CLI commands.

Values are layered: RunConfig defaults (from the environment), then the
``--config`` file, then explicit flags.
"""

import argparse
import os
from typing import Any, Dict

from dotenv import dotenv_values

from trustprop import config
from trustprop.exceptions import ValidationError
from trustprop.models import CutoffKind, Method, RunConfig, WeightKind
from trustprop.services.data_service import RATING_FILE, TRUST_FILE
from trustprop.utils.validators import validate_args, validate_config

# Flag destination -> RunConfig field
FLAG_FIELDS = {
    "trust": "trust_file", "ratings": "rating_file", "dataset": "dataset", "lmax": "l_max",
    "method": "method", "weight": "weight", "cth": "c_th", "cutoff": "cutoff", "alpha": "alpha",
    "q": "q", "epsilon": "epsilon", "heavy_min_count": "heavy_min_count",
    "cold_max_count": "cold_max_count", "seed": "seed", "user_cap": "user_cap",
    "scale": "scale", "output_dir": "output_dir", "dataset_dir": "dataset_dir",
}


def add_dataset_args(parser: argparse.ArgumentParser) -> None:
    """Raw input files and the ingestion filters, or a directory written by ``generate``."""
    parser.add_argument("--trust", help="Trust file: truster trustee [weight]")
    parser.add_argument("--ratings", help="Rating file: user item rating")
    parser.add_argument("--dataset-dir", dest="dataset_dir",
                        help="Filtered dataset directory; replaces --trust and --ratings")
    parser.add_argument("--dataset", help="Dataset label; filmtrust/epinions also select the rating scale")
    parser.add_argument("--user-cap", dest="user_cap", type=validate_args.positive_int,
                        help="Uniform random user subsample before filtering")
    parser.add_argument("--scale", type=validate_args.scale, help="Rating scale as low,high")
    parser.add_argument("--seed", type=int, help=f"Random seed (default {config.SEED})")


def add_inference_args(parser: argparse.ArgumentParser, with_method: bool = True) -> None:
    """Enumeration and weight flags shared by infer, compare and evaluate."""
    if with_method:
        parser.add_argument("--method", choices=[m.value for m in Method],
                            help=f"Enumeration method (default {config.DEFAULT_METHOD})")
    parser.add_argument("--weight", choices=[w.value for w in WeightKind],
                        help=f"Node weight kind (default {config.DEFAULT_WEIGHT})")
    parser.add_argument("--lmax", type=validate_args.l_max,
                        help=f"Maximum path length (default {config.DEFAULT_LMAX})")
    parser.add_argument("--cth", type=validate_args.non_negative_float,
                        help="Cut-off scale c_th (default 1 for indeg, 10*L_max otherwise)")
    parser.add_argument("--cutoff", choices=[c.value for c in CutoffKind],
                        help="Cut-off rule; --alpha alone selects the percentile rule")
    parser.add_argument("--alpha", type=validate_args.percentile, help="Percentile for the alpha cut-off")
    parser.add_argument("--q", type=float, help="delta scale q (default 1/L_max)")
    parser.add_argument("--epsilon", type=validate_args.non_negative_float, help="delta smoothing term")
    parser.add_argument("--heavy-min-count", dest="heavy_min_count", type=int,
                        help=f"Ratings for a heavy item (default {config.HEAVY_MIN_COUNT})")
    parser.add_argument("--cold-max-count", dest="cold_max_count", type=int,
                        help=f"Ratings for a cold item (default {config.COLD_MAX_COUNT})")


def add_runtime_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="KEY=VALUE file with run settings")
    parser.add_argument("--workers", type=validate_args.positive_int,
                        help=f"Worker processes (default {config.WORKERS})")
    parser.add_argument("--output-dir", dest="output_dir", help=f"Report directory (default {config.OUTPUT_DIR})")


def read_config_file(path: str) -> Dict[str, Any]:
    """
    Typed overrides from a ``--config`` file.

    Raises:
        ValidationError: On unknown keys or bad values
    """
    overrides, error = validate_config.parse(dotenv_values(path))
    if error:
        raise ValidationError(f"{path}: {error}")
    return overrides


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Assemble and validate a RunConfig from parsed arguments.

    Raises:
        ValidationError: If the combined settings are inconsistent
    """
    values: Dict[str, Any] = {}
    if getattr(args, "config", None):
        values.update(read_config_file(args.config))
    values.pop("workers", None)
    for flag, field_name in FLAG_FIELDS.items():
        value = getattr(args, flag, None)
        if value is not None:
            values[field_name] = value

    if getattr(args, "alpha", None) is not None and getattr(args, "cutoff", None) is None:
        values["cutoff"] = CutoffKind.ALPHA.value
    if values.get("dataset_dir"):
        values["trust_file"] = os.path.join(values["dataset_dir"], TRUST_FILE)
        values["rating_file"] = os.path.join(values["dataset_dir"], RATING_FILE)
    dataset = values.get("dataset")
    if values.get("scale") is None and dataset in config.RATING_SCALES:
        values["scale"] = config.RATING_SCALES[dataset]

    run_config = RunConfig(**values)
    run_config.validate()
    return run_config


def resolve_workers(args: argparse.Namespace) -> int:
    """--workers flag, then the config file, then the environment default."""
    if getattr(args, "workers", None):
        return args.workers
    if getattr(args, "config", None):
        return int(read_config_file(args.config).get("workers", config.WORKERS))
    return config.WORKERS
