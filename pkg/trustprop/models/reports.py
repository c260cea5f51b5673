"""
Report models.

Rows of the inferred-graph comparison table and the recommendation
evaluation table.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from trustprop.config import COMPARISON_COLUMNS, EVAL_COLUMNS
from trustprop.exceptions import ValidationError


@dataclass
class ComparisonReport:
    """Metrics of one (method, weight, L_max, c_th) inferred graph against its oracle."""

    method: str
    weight: str
    l_max: int
    duration_s: float
    path_count: int
    edges: int
    density: float
    edges_missed_pct: float = 0.0
    score_pct: float = 0.0
    mean_error: float = 0.0

    def __post_init__(self):
        self._validate()

    def to_row(self) -> Dict[str, Any]:
        """Row dict in the report's column order."""
        return {column: getattr(self, column) for column in COMPARISON_COLUMNS}

    @classmethod
    def from_row(cls, row: Dict[str, Any]) -> "ComparisonReport":
        """
        Rebuild a report from a CSV row.

        Raises:
            ValidationError: If a column is missing
        """
        missing = [column for column in COMPARISON_COLUMNS if column not in row]
        if missing:
            raise ValidationError(f"Missing report columns: {missing}")
        return cls(
            method=str(row["method"]),
            weight=str(row["weight"]),
            l_max=int(row["l_max"]),
            duration_s=float(row["duration_s"]),
            path_count=int(row["path_count"]),
            edges=int(row["edges"]),
            density=float(row["density"]),
            edges_missed_pct=float(row["edges_missed_pct"]),
            score_pct=float(row["score_pct"]),
            mean_error=float(row["mean_error"]),
        )

    def _validate(self) -> None:
        if not 0.0 <= self.edges_missed_pct <= 100.0:
            raise ValidationError(f"edges_missed_pct {self.edges_missed_pct} outside [0, 100]")
        if not 0.0 <= self.score_pct <= 100.0:
            raise ValidationError(f"score_pct {self.score_pct} outside [0, 100]")
        if self.mean_error < 0.0:
            raise ValidationError(f"mean_error {self.mean_error} is negative")
        if not 0.0 <= self.density <= 1.0:
            raise ValidationError(f"density {self.density} outside [0, 1]")


@dataclass
class EvalReport:
    """Leave-one-out accuracy and coverage of one inferred graph."""

    dataset: str
    method: str
    mae: float
    rmse: float
    coverage_pct: float
    # run diagnostics, not part of the CSV row
    total_ratings: Optional[int] = field(default=None, compare=False)
    unpredictable: Optional[int] = field(default=None, compare=False)

    def to_row(self) -> Dict[str, Any]:
        values = [self.dataset, self.method, self.mae, self.rmse, self.coverage_pct]
        return dict(zip(EVAL_COLUMNS, values))

    @classmethod
    def from_row(cls, row: Dict[str, Any]) -> "EvalReport":
        return cls(dataset=str(row["dataset"]), method=str(row["method"]),
                   mae=float(row["MAE"]), rmse=float(row["RMSE"]),
                   coverage_pct=float(row["coverage_pct"]))
