"""
Dataset service.

Handles trust/rating file ingestion with the dataset filtering rules,
dense-id dataset and edge-list files, and seeded synthetic data.
"""

import json
import logging
import os
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import pandas as pd

from trustprop import config
from trustprop.exceptions import DatasetFormatError, EmptyDatasetError, ValidationError
from trustprop.models import InferredGraph, RatingTable, RunConfig, TrustGraph

logger = logging.getLogger(__name__)

SEPARATOR = r"[\t, ]+"
TRUST_FILE = "trust.tsv"
RATING_FILE = "ratings.tsv"
USERS_FILE = "users.tsv"
ITEMS_FILE = "items.tsv"
META_FILE = "dataset.json"
EDGE_COLUMNS = ["src", "dst", "weight", "provenance"]


def _natural_key(raw_id: str) -> Tuple[int, object]:
    stripped = raw_id.lstrip("-")
    return (0, int(raw_id)) if stripped.isdigit() else (1, raw_id)


class DataService:
    """Service class for dataset files and synthetic graph generation."""

    def ingest(self, trust_file: str, rating_file: str, user_cap: Optional[int] = None,
               seed: int = config.SEED, scale: Optional[Tuple[float, float]] = None
               ) -> Tuple[TrustGraph, RatingTable]:
        """
        Load and filter a trust network and its ratings.

        After an optional seeded uniform subsample of ``user_cap`` users, two
        filters repeat until neither removes anything: keep users with a trust
        tie and a rating, keep items rated by at least two of them. The result
        is a fixed point, so ingesting it again changes nothing. Dense ids
        follow the natural order of the raw ids.

        Args:
            trust_file: Lines of ``truster trustee [weight]``
            rating_file: Lines of ``user item rating``
            user_cap: Optional subsample size
            seed: Seed for the subsample
            scale: Rating bounds; inferred from the data when omitted

        Returns:
            Tuple of (TrustGraph, RatingTable) over the same dense user ids

        Raises:
            DatasetFormatError: On a malformed line (with its line number)
            EmptyDatasetError: If nothing survives filtering
        """
        trust = self._read_table(trust_file, ["truster", "trustee", "weight"], required=2)
        trust["weight"] = trust["weight"].fillna(1.0)
        ratings = self._read_table(rating_file, ["user", "item", "rating"], required=3)

        self._check_range(trust, "weight", 0.0, 1.0, trust_file)
        if scale is not None:
            self._check_range(ratings, "rating", scale[0], scale[1], rating_file)

        loops = trust["truster"] == trust["trustee"]
        if loops.any():
            logger.warning("Dropping %d self-trust statements from %s", int(loops.sum()), trust_file)
            trust = trust[~loops]
        trust = trust.drop_duplicates(subset=["truster", "trustee"], keep="last")
        ratings = ratings.drop_duplicates(subset=["user", "item"], keep="last")

        if user_cap is not None:
            universe = sorted(set(trust["truster"]) | set(trust["trustee"]) | set(ratings["user"]),
                              key=_natural_key)
            if user_cap < len(universe):
                rng = np.random.default_rng(seed)
                picked = rng.choice(len(universe), size=user_cap, replace=False)
                chosen = {universe[i] for i in picked}
                trust = trust[trust["truster"].isin(chosen) & trust["trustee"].isin(chosen)]
                ratings = ratings[ratings["user"].isin(chosen)]
                logger.info("Subsampled %d of %d users (seed %d)", user_cap, len(universe), seed)

        trust, ratings, kept_users = self._filter_to_fixed_point(trust, ratings)

        if not kept_users or ratings.empty:
            raise EmptyDatasetError(f"No users or ratings left after filtering {trust_file}, {rating_file}")

        users = sorted(kept_users, key=_natural_key)
        items = sorted(set(ratings["item"]), key=_natural_key)
        if scale is None:
            scale = (float(ratings["rating"].min()), float(ratings["rating"].max()))

        graph = TrustGraph(len(users), labels=users)
        user_ids = {raw: dense for dense, raw in enumerate(users)}
        item_ids = {raw: dense for dense, raw in enumerate(items)}
        for src, dst, weight in trust[["truster", "trustee", "weight"]].itertuples(index=False):
            graph.add_edge(user_ids[src], user_ids[dst], float(weight))
        table = RatingTable(len(users), len(items), scale=scale, item_labels=items)
        for user, item, value in ratings[["user", "item", "rating"]].itertuples(index=False):
            table.add_rating(user_ids[user], item_ids[item], float(value))

        logger.info("Ingested %d users, %d items, %d ratings, %d trust ties",
                    graph.node_count, table.item_count, len(table), graph.edge_count)
        return graph, table

    @staticmethod
    def _filter_to_fixed_point(trust: pd.DataFrame, ratings: pd.DataFrame
                               ) -> Tuple[pd.DataFrame, pd.DataFrame, set]:
        rounds = 0
        while True:
            rounds += 1
            kept_users = (set(trust["truster"]) | set(trust["trustee"])) & set(ratings["user"])
            next_trust = trust[trust["truster"].isin(kept_users) & trust["trustee"].isin(kept_users)]
            next_ratings = ratings[ratings["user"].isin(kept_users)]
            item_counts = next_ratings["item"].value_counts()
            next_ratings = next_ratings[next_ratings["item"].isin(item_counts[item_counts >= 2].index)]
            if len(next_trust) == len(trust) and len(next_ratings) == len(ratings):
                logger.debug("Filters settled after %d rounds", rounds)
                return trust, ratings, kept_users
            trust, ratings = next_trust, next_ratings

    def load_for_run(self, cfg: RunConfig) -> Tuple[TrustGraph, RatingTable]:
        """A run's data: a written dataset directory as is, otherwise the raw files ingested."""
        if cfg.dataset_dir:
            return self.load_dataset(cfg.dataset_dir)
        return self.ingest(cfg.trust_file, cfg.rating_file, user_cap=cfg.user_cap,
                           seed=cfg.seed, scale=cfg.scale)

    def dataset_counts(self, graph: TrustGraph, ratings: RatingTable) -> Dict[str, int]:
        return {"users": graph.node_count, "items": ratings.item_count,
                "ratings": len(ratings), "ties": graph.edge_count}

    def write_dataset(self, graph: TrustGraph, ratings: RatingTable, directory: str) -> Dict[str, str]:
        """
        Write a filtered dataset with dense ids plus its label tables.

        Returns:
            Mapping of file role to written path
        """
        os.makedirs(directory, exist_ok=True)
        paths = {role: os.path.join(directory, name) for role, name in (
            ("trust", TRUST_FILE), ("ratings", RATING_FILE), ("users", USERS_FILE),
            ("items", ITEMS_FILE), ("meta", META_FILE))}

        pd.DataFrame(list(graph.edges())).to_csv(paths["trust"], sep="\t", header=False, index=False)
        pd.DataFrame(list(ratings.ratings())).to_csv(paths["ratings"], sep="\t", header=False, index=False)
        pd.DataFrame({"id": list(graph.nodes()),
                      "label": [graph.label(u) for u in graph.nodes()]}
                     ).to_csv(paths["users"], sep="\t", header=False, index=False)
        item_labels = ratings.item_labels or [str(i) for i in range(ratings.item_count)]
        pd.DataFrame({"id": range(ratings.item_count), "label": item_labels}
                     ).to_csv(paths["items"], sep="\t", header=False, index=False)
        with open(paths["meta"], "w") as handle:
            json.dump({"scale": list(ratings.scale), **self.dataset_counts(graph, ratings)}, handle, indent=2)
        return paths

    def load_dataset(self, directory: str) -> Tuple[TrustGraph, RatingTable]:
        """
        Read a directory produced by ``write_dataset`` as it is.

        Ids are already dense and the filters already settled, so nothing is
        filtered again; raw labels come back from the user and item tables.

        Raises:
            DatasetFormatError: If a file is missing or does not fit the layout
        """
        paths = {name: os.path.join(directory, name)
                 for name in (TRUST_FILE, RATING_FILE, USERS_FILE, ITEMS_FILE, META_FILE)}
        missing = [path for path in paths.values() if not os.path.exists(path)]
        if missing:
            raise DatasetFormatError("Missing dataset file", missing[0])

        with open(paths[META_FILE]) as handle:
            meta = json.load(handle)
        users = pd.read_csv(paths[USERS_FILE], sep="\t", header=None, names=["id", "label"],
                            dtype=str, keep_default_na=False)
        items = pd.read_csv(paths[ITEMS_FILE], sep="\t", header=None, names=["id", "label"],
                            dtype=str, keep_default_na=False)
        trust = self._read_table(paths[TRUST_FILE], ["truster", "trustee", "weight"], required=3)
        ratings = self._read_table(paths[RATING_FILE], ["user", "item", "rating"], required=3)

        try:
            graph = TrustGraph(len(users), labels=list(users["label"]))
            for src, dst, weight in trust.itertuples(index=False):
                graph.add_edge(int(src), int(dst), float(weight))
            table = RatingTable(len(users), len(items), scale=tuple(meta["scale"]),
                                item_labels=list(items["label"]))
            for user, item, value in ratings.itertuples(index=False):
                table.add_rating(int(user), int(item), float(value))
        except (ValueError, KeyError) as exc:
            raise DatasetFormatError(f"Not a written dataset: {exc}", directory) from exc

        logger.info("Loaded dataset %s: %s", directory, self.dataset_counts(graph, table))
        return graph, table

    def write_edge_list(self, graph: TrustGraph, path: str) -> str:
        """Write ``src<TAB>dst<TAB>weight<TAB>provenance`` lines in canonical order."""
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        rows = []
        for src, dst, weight in graph.edges():
            inferred = isinstance(graph, InferredGraph) and graph.is_inferred(src, dst)
            rows.append((src, dst, weight,
                         InferredGraph.INFERRED if inferred else InferredGraph.ORIGINAL))
        pd.DataFrame(rows, columns=EDGE_COLUMNS).to_csv(path, sep="\t", header=False, index=False)
        return path

    def read_edge_list(self, path: str, node_count: int,
                       labels: Optional[Sequence[str]] = None) -> InferredGraph:
        """
        Read an edge list written by ``write_edge_list``.

        Raises:
            DatasetFormatError: On an unknown provenance value
        """
        graph = InferredGraph(node_count, labels)
        try:
            df = pd.read_csv(path, sep="\t", header=None, names=EDGE_COLUMNS)
        except pd.errors.EmptyDataError:
            return graph
        for line, (src, dst, weight, provenance) in enumerate(df.itertuples(index=False), start=1):
            if provenance == InferredGraph.INFERRED:
                graph.add_inferred_edge(int(src), int(dst), float(weight))
            elif provenance == InferredGraph.ORIGINAL:
                graph.add_edge(int(src), int(dst), float(weight))
            else:
                raise DatasetFormatError(f"Unknown provenance '{provenance}'", path, line)
        return graph

    def generate_powerlaw(self, n: int, m: int, seed: int = config.SEED,
                          reciprocity: float = 0.0) -> TrustGraph:
        """
        Directed preferential-attachment graph with unit trust weights.

        Each newcomer trusts the established nodes it attaches to, so
        indegree follows the heavy-tailed attachment degree. With
        ``reciprocity`` > 0, each tie is returned with that probability.

        Args:
            n: Node count (>= 2)
            m: Edges per new node (>= 1, reduced to n - 1 if larger)
            seed: Random seed
            reciprocity: Probability of adding the reverse tie

        Returns:
            The generated TrustGraph
        """
        if n < 2 or m < 1:
            raise ValidationError(f"Power-law graph needs n >= 2 and m >= 1, got n={n}, m={m}")
        m = min(m, n - 1)
        undirected = nx.barabasi_albert_graph(n, m, seed=seed)
        rng = np.random.default_rng(seed)
        graph = TrustGraph(n)
        for u, v in sorted(undirected.edges()):
            newer, older = max(u, v), min(u, v)
            graph.add_edge(newer, older, 1.0)
            if reciprocity > 0 and rng.random() < reciprocity:
                graph.add_edge(older, newer, 1.0)
        logger.info("Generated power-law graph: %d nodes, %d edges (m=%d, seed=%d)",
                    n, graph.edge_count, m, seed)
        return graph

    def generate_ratings(self, graph: TrustGraph, item_count: int, mean_per_user: float = 8.0,
                         seed: int = config.SEED, scale: Tuple[float, float] = (1.0, 5.0),
                         step: float = 1.0, popularity_exponent: float = 1.0) -> RatingTable:
        """
        Seeded synthetic ratings with long-tail item popularity.

        Item j is drawn with probability proportional to (j + 1) ** -exponent;
        values are user bias + item quality + noise, rounded to ``step`` and
        clipped to ``scale``. Every user rates at least one item.
        """
        if item_count < 1:
            raise ValidationError("Synthetic ratings need at least one item")
        rng = np.random.default_rng(seed)
        popularity = 1.0 / np.arange(1, item_count + 1) ** popularity_exponent
        popularity /= popularity.sum()
        low, high = scale
        middle = (low + high) / 2
        item_quality = rng.normal(0.0, (high - low) / 6, item_count)

        table = RatingTable(graph.node_count, item_count, scale=scale)
        for user in graph.nodes():
            count = int(min(item_count, 1 + rng.poisson(max(mean_per_user - 1, 0))))
            items = rng.choice(item_count, size=count, replace=False, p=popularity)
            bias = rng.normal(0.0, (high - low) / 8)
            noise = rng.normal(0.0, (high - low) / 8, count)
            values = np.clip(np.round((middle + bias + item_quality[items] + noise) / step) * step, low, high)
            for item, value in zip(items, values):
                table.add_rating(user, int(item), float(value))
        return table

    def _read_table(self, path: str, columns: List[str], required: int) -> pd.DataFrame:
        """Parse a separated text file; numeric column errors report the 1-based line."""
        try:
            df = pd.read_csv(path, sep=SEPARATOR, engine="python", header=None, names=columns,
                             dtype=str, skip_blank_lines=False, on_bad_lines="error")
        except pd.errors.ParserError as exc:
            raise DatasetFormatError(str(exc), path) from exc
        except pd.errors.EmptyDataError:
            df = pd.DataFrame(columns=columns, dtype=str)

        df.index = df.index + 1
        df = df[df.notna().any(axis=1)]
        for column in columns[:required]:
            missing = df[column].isna()
            if missing.any():
                raise DatasetFormatError(f"Missing {column} field", path, int(missing.idxmax()))
        numeric = columns[2]
        values = pd.to_numeric(df[numeric], errors="coerce")
        bad = values.isna() & df[numeric].notna()
        if bad.any():
            line = int(bad.idxmax())
            raise DatasetFormatError(f"Non-numeric {numeric} '{df.at[line, numeric]}'", path, line)
        df[numeric] = values
        return df

    @staticmethod
    def _check_range(df: pd.DataFrame, column: str, low: float, high: float, path: str) -> None:
        out = (df[column] < low) | (df[column] > high)
        if out.any():
            line = int(out.idxmax())
            raise DatasetFormatError(f"{column} {df.at[line, column]} outside [{low}, {high}]", path, line)


# Global service instance
data_service = DataService()
