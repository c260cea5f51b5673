"""
Plot helpers for sweep outputs.

Figures are written to files only; the Agg backend keeps this usable on
headless machines.
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402
import seaborn as sns  # noqa: E402


def plot_alpha_density(alpha_df: pd.DataFrame, filepath: str) -> str:
    """Inferred-graph density against the alpha percentile, one line per L_max."""
    plt.figure(figsize=(7, 4))
    sns.lineplot(data=alpha_df, x="alpha", y="density", hue="l_max", marker="o")
    plt.title("Density for different alpha thresholds")
    plt.xlabel("alpha (percentile)")
    plt.ylabel("Density")
    plt.tight_layout()
    return _save(filepath)


def plot_metric_vs_lmax(comparison_df: pd.DataFrame, metric: str, filepath: str,
                        include_all: bool = False, log_scale: bool = False) -> str:
    """
    A comparison metric against L_max, one line per method/weight run.

    Exhaustive rows are dropped unless ``include_all``; they share one line
    since their paths and edges do not depend on the weight.
    """
    data = comparison_df if include_all else comparison_df[comparison_df["method"] != "all"]
    data = data.copy()
    data["run"] = (data["method"] + "-Th-" + data["weight"]).where(data["method"] != "all", "all")
    plt.figure(figsize=(7, 4))
    sns.lineplot(data=data, x="l_max", y=metric, hue="run", marker="o", errorbar=None)
    if log_scale:
        plt.yscale("log")
    plt.xlabel("L_max")
    plt.ylabel(metric)
    plt.tight_layout()
    return _save(filepath)


def _save(filepath: str) -> str:
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)
    plt.savefig(filepath)
    plt.close()
    return filepath
