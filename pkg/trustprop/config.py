"""
Configuration settings for TrustProp.

Values come from the environment (optionally a .env file) with typed defaults.
The CLI can layer a config file and explicit flags on top of these.
"""

import os
from dotenv import load_dotenv

load_dotenv()

# Inference defaults
DEFAULT_LMAX = int(os.getenv('TRUSTPROP_LMAX', 3))
DEFAULT_WEIGHT = os.getenv('TRUSTPROP_WEIGHT', 'indeg')
DEFAULT_METHOD = os.getenv('TRUSTPROP_METHOD', 'all')
DEFAULT_EPSILON = float(os.getenv('TRUSTPROP_EPSILON', 0.0))
DEFAULT_ALPHA = float(os.getenv('TRUSTPROP_ALPHA', 50.0))

# Item categories for the TrustNPurchase weight (inclusive boundaries)
COLD_MAX_COUNT = int(os.getenv('TRUSTPROP_COLD_MAX_COUNT', 4))
HEAVY_MIN_COUNT = int(os.getenv('TRUSTPROP_HEAVY_MIN_COUNT', 20))

# Runtime
OUTPUT_DIR = os.getenv('TRUSTPROP_OUTPUT_DIR', 'output')
CACHE_DIR = os.getenv('TRUSTPROP_CACHE_DIR', '.trustprop_cache')
WORKERS = int(os.getenv('TRUSTPROP_WORKERS', 1))
SEED = int(os.getenv('TRUSTPROP_SEED', 42))
LOG_LEVEL = os.getenv('TRUSTPROP_LOG_LEVEL', 'INFO')
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Rating scales declared per dataset
RATING_SCALES = {
    "filmtrust": (0.5, 4.0),
    "epinions": (1.0, 5.0),
}

# Published FilmTrust snapshot counts and its all-path L_max=3 result
FILMTRUST_COUNTS = {"users": 507, "items": 1888, "ratings": 14272, "ties": 1448}
FILMTRUST_ALLPATH_L3 = {"edges": 32972, "path_count": 102896}

# Report column orders
COMPARISON_COLUMNS = [
    "method", "weight", "l_max", "duration_s", "path_count", "edges",
    "density", "edges_missed_pct", "score_pct", "mean_error",
]
EVAL_COLUMNS = ["dataset", "method", "MAE", "RMSE", "coverage_pct"]
ALPHA_COLUMNS = ["alpha", "l_max", "weight", "edges", "density"]
