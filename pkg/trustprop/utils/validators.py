"""
Input validation utilities for command-line arguments.

Provides argparse ``type=`` callables and checks for config-file overrides.
"""

import argparse
from typing import Dict, List, Optional, Tuple

from trustprop.models import CutoffKind, Method, WeightKind


class ArgumentValidators:
    """Collection of command-line argument parsers."""

    @staticmethod
    def l_max(value: str) -> int:
        """
        Parse an L_max value.

        Args:
            value: Raw flag value

        Returns:
            The integer L_max

        Raises:
            argparse.ArgumentTypeError: If not an integer >= 2
        """
        try:
            l_max = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"L_max must be an integer, got {value!r}")
        if l_max < 2:
            raise argparse.ArgumentTypeError(f"L_max must be >= 2, got {l_max}")
        return l_max

    @staticmethod
    def non_negative_float(value: str) -> float:
        try:
            number = float(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"Expected a number, got {value!r}")
        if number < 0:
            raise argparse.ArgumentTypeError(f"Expected a non-negative number, got {number}")
        return number

    @staticmethod
    def positive_int(value: str) -> int:
        try:
            number = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"Expected an integer, got {value!r}")
        if number < 1:
            raise argparse.ArgumentTypeError(f"Expected a positive integer, got {number}")
        return number

    @staticmethod
    def percentile(value: str) -> float:
        """Parse an alpha percentile in the open interval (0, 100)."""
        try:
            alpha = float(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"alpha must be a number, got {value!r}")
        if not 0 < alpha < 100:
            raise argparse.ArgumentTypeError(f"alpha must lie in (0, 100), got {alpha}")
        return alpha

    @staticmethod
    def scale(value: str) -> Tuple[float, float]:
        """
        Parse a rating scale written ``low,high``.

        Raises:
            argparse.ArgumentTypeError: If malformed or low >= high
        """
        parts = [p.strip() for p in value.split(",")]
        try:
            low, high = (float(p) for p in parts)
        except ValueError:
            raise argparse.ArgumentTypeError(f"Scale must look like 'low,high', got {value!r}")
        if low >= high:
            raise argparse.ArgumentTypeError(f"Scale low ({low}) must be below high ({high})")
        return low, high


class ListValidators:
    """Comma-separated list parsers for the sweep grid."""

    @staticmethod
    def _split(value: str) -> List[str]:
        items = [item.strip() for item in value.split(",") if item.strip()]
        if not items:
            raise argparse.ArgumentTypeError("Expected a comma-separated list")
        return items

    @classmethod
    def methods(cls, value: str) -> List[str]:
        valid = [m.value for m in Method]
        items = cls._split(value)
        bad = [item for item in items if item not in valid]
        if bad:
            raise argparse.ArgumentTypeError(f"Invalid method(s) {bad}. Must be among: {valid}")
        return items

    @classmethod
    def weights(cls, value: str) -> List[str]:
        valid = [w.value for w in WeightKind]
        items = cls._split(value)
        bad = [item for item in items if item not in valid]
        if bad:
            raise argparse.ArgumentTypeError(f"Invalid weight(s) {bad}. Must be among: {valid}")
        return items

    @classmethod
    def l_maxes(cls, value: str) -> List[int]:
        return [ArgumentValidators.l_max(item) for item in cls._split(value)]

    @classmethod
    def alphas(cls, value: str) -> List[float]:
        return [ArgumentValidators.percentile(item) for item in cls._split(value)]


class ConfigFileValidators:
    """Checks for KEY=VALUE run-config files."""

    KNOWN_KEYS = {
        "method": str, "weight": str, "l_max": int, "c_th": float, "cutoff": str,
        "alpha": float, "q": float, "epsilon": float, "heavy_min_count": int,
        "cold_max_count": int, "seed": int, "user_cap": int, "dataset": str,
        "workers": int, "output_dir": str, "dataset_dir": str,
    }

    @classmethod
    def parse(cls, values: Dict[str, Optional[str]]) -> Tuple[Dict, Optional[str]]:
        """
        Convert raw config-file values to typed overrides.

        Args:
            values: Mapping read from the file, keys case-insensitive

        Returns:
            Tuple of (overrides, error_message)
        """
        overrides = {}
        for raw_key, raw_value in values.items():
            key = raw_key.lower()
            if key not in cls.KNOWN_KEYS:
                return {}, f"Unknown config key: {raw_key}"
            if raw_value is None or raw_value == "":
                continue
            try:
                overrides[key] = cls.KNOWN_KEYS[key](raw_value)
            except ValueError:
                return {}, f"Invalid value for {raw_key}: {raw_value!r}"
        for key, enum in (("method", Method), ("weight", WeightKind), ("cutoff", CutoffKind)):
            if key in overrides and overrides[key] not in [e.value for e in enum]:
                return {}, f"Invalid {key}: {overrides[key]}"
        return overrides, None


# Create instances for easy importing
validate_args = ArgumentValidators()
validate_lists = ListValidators()
validate_config = ConfigFileValidators()
