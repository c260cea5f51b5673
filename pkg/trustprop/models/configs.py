"""
Run configuration models.

Weight, enumeration and scoring settings, plus the aggregate RunConfig the CLI
and the sweep service work with.
"""

from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from trustprop import config
from trustprop.exceptions import ValidationError


class WeightKind(str, Enum):
    INDEGREE = "indeg"
    DELTA = "delta"
    GAMMA = "gamma"


class Method(str, Enum):
    ALL = "all"
    H1 = "h1"
    H2 = "h2"


class CutoffKind(str, Enum):
    MEAN = "mean"
    ALPHA = "alpha"


class BenefitKind(str, Enum):
    DELTA_SUM = "delta-sum"
    GAMMA_SIGMOID = "gamma-sigmoid"
    NONE = "none"


def default_cth(weight: WeightKind, l_max: int) -> float:
    """Cut-off scale used when none is given: 1 for indegree, 10*L_max otherwise."""
    return 1.0 if WeightKind(weight) is WeightKind.INDEGREE else 10.0 * l_max


@dataclass
class WeightConfig:
    """Parameters of the node-influence weight functions."""

    kind: WeightKind = WeightKind.INDEGREE
    q: Optional[float] = None
    epsilon: float = config.DEFAULT_EPSILON
    heavy_min_count: int = config.HEAVY_MIN_COUNT
    cold_max_count: int = config.COLD_MAX_COUNT

    def __post_init__(self):
        self.kind = WeightKind(self.kind)

    def resolved_q(self, l_max: int) -> float:
        """q itself, or its maximum 1/L_max when unset."""
        return self.q if self.q is not None else 1.0 / l_max

    def validate(self, l_max: int) -> None:
        """
        Check the weight parameters against the run's L_max.

        Raises:
            ValidationError: If q, epsilon or the category thresholds are invalid
        """
        q = self.resolved_q(l_max)
        if not 0 < q <= 1.0 / l_max + 1e-15:
            raise ValidationError(f"q must satisfy 0 < q <= 1/L_max ({1.0 / l_max:.6g}), got {q}")
        if self.epsilon < 0:
            raise ValidationError(f"epsilon must be non-negative, got {self.epsilon}")
        if not self.cold_max_count < self.heavy_min_count:
            raise ValidationError(
                f"cold-max-count ({self.cold_max_count}) must be below "
                f"heavy-min-count ({self.heavy_min_count})")


@dataclass
class EnumConfig:
    """Path enumeration settings."""

    l_max: int = config.DEFAULT_LMAX
    method: Method = Method.ALL
    c_th: float = 1.0
    cutoff: CutoffKind = CutoffKind.MEAN
    alpha: float = config.DEFAULT_ALPHA

    def __post_init__(self):
        self.method = Method(self.method)
        self.cutoff = CutoffKind(self.cutoff)

    def validate(self) -> None:
        if not isinstance(self.l_max, int) or self.l_max < 2:
            raise ValidationError(f"L_max must be an integer >= 2, got {self.l_max}")
        if self.c_th < 0:
            raise ValidationError(f"c_th must be non-negative, got {self.c_th}")
        if self.cutoff is CutoffKind.ALPHA and not 0 < self.alpha < 100:
            raise ValidationError(f"alpha must lie in (0, 100), got {self.alpha}")


@dataclass
class ScoringConfig:
    """How a path is scored: penalty horizon and the benefit drawn from intermediates."""

    l_max: int
    benefit: BenefitKind = BenefitKind.DELTA_SUM
    benefit_weights: Sequence[float] = field(default_factory=list)

    def __post_init__(self):
        self.benefit = BenefitKind(self.benefit)


@dataclass
class RunConfig:
    """
    One experiment configuration: dataset, enumeration, weights and outputs.

    Mirrors the CLI flags; ``to_weight_config`` and ``to_enum_config`` split it
    into the per-module settings.
    """

    trust_file: str = ""
    rating_file: str = ""
    dataset_dir: Optional[str] = None
    dataset: str = "dataset"
    l_max: int = config.DEFAULT_LMAX
    method: Method = Method(config.DEFAULT_METHOD)
    weight: WeightKind = WeightKind(config.DEFAULT_WEIGHT)
    c_th: Optional[float] = None
    cutoff: CutoffKind = CutoffKind.MEAN
    alpha: float = config.DEFAULT_ALPHA
    q: Optional[float] = None
    epsilon: float = config.DEFAULT_EPSILON
    heavy_min_count: int = config.HEAVY_MIN_COUNT
    cold_max_count: int = config.COLD_MAX_COUNT
    seed: int = config.SEED
    user_cap: Optional[int] = None
    scale: Optional[Tuple[float, float]] = None
    evaluate: bool = False
    output_dir: str = config.OUTPUT_DIR

    def __post_init__(self):
        self.method = Method(self.method)
        self.weight = WeightKind(self.weight)
        self.cutoff = CutoffKind(self.cutoff)

    @property
    def resolved_cth(self) -> float:
        return self.c_th if self.c_th is not None else default_cth(self.weight, self.l_max)

    def to_weight_config(self) -> WeightConfig:
        return WeightConfig(kind=self.weight, q=self.q, epsilon=self.epsilon,
                            heavy_min_count=self.heavy_min_count,
                            cold_max_count=self.cold_max_count)

    def to_enum_config(self, method: Optional[Method] = None) -> EnumConfig:
        return EnumConfig(l_max=self.l_max, method=method or self.method,
                          c_th=self.resolved_cth, cutoff=self.cutoff, alpha=self.alpha)

    def validate(self) -> None:
        """Check every module constraint jointly."""
        self.to_enum_config().validate()
        self.to_weight_config().validate(self.l_max)
        if not self.dataset_dir and not (self.trust_file and self.rating_file):
            raise ValidationError("Need --trust and --ratings, or --dataset-dir")
        if self.user_cap is not None and self.user_cap < 1:
            raise ValidationError("user_cap must be positive")

    def with_overrides(self, **changes: Any) -> "RunConfig":
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        for key in ("method", "weight", "cutoff"):
            data[key] = data[key].value
        return data


def expand_grid(base: RunConfig, methods: Sequence[str], weights: Sequence[str],
                l_maxes: Sequence[int], alphas: Sequence[float] = ()) -> List[RunConfig]:
    """
    Cartesian product of methods x weights x L_max over a base config.

    ``all`` runs once per weight kind: its paths do not depend on the weight
    (the oracle index is shared) but the scores and recommendations do. Each
    alpha adds an indegree-weighted H1 run with the percentile
    cut-off for the sensitivity sweep.
    """
    grid: List[RunConfig] = []
    for l_max in l_maxes:
        for method in methods:
            for weight in weights:
                grid.append(base.with_overrides(l_max=l_max, method=Method(method),
                                                weight=WeightKind(weight),
                                                cutoff=CutoffKind.MEAN))
        for alpha in alphas:
            grid.append(base.with_overrides(l_max=l_max, method=Method.H1,
                                            weight=WeightKind.INDEGREE,
                                            cutoff=CutoffKind.ALPHA, alpha=float(alpha)))
    return grid
