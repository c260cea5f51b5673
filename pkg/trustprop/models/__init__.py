from trustprop.models.configs import (BenefitKind, CutoffKind, EnumConfig, Method,
                                      RunConfig, ScoringConfig, WeightConfig, WeightKind,
                                      default_cth, expand_grid)
from trustprop.models.graph import InferredGraph, TrustGraph
from trustprop.models.path_index import PathIndex, path_count
from trustprop.models.ratings import RatingTable
from trustprop.models.reports import ComparisonReport, EvalReport

__all__ = [
    "BenefitKind", "ComparisonReport", "CutoffKind", "EnumConfig", "EvalReport",
    "InferredGraph", "Method", "PathIndex", "RatingTable", "RunConfig",
    "ScoringConfig", "TrustGraph", "WeightConfig", "WeightKind", "default_cth",
    "expand_grid", "path_count",
]
