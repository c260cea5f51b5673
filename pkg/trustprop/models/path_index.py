"""
Path index model.

Maps an ordered, non-adjacent node pair to the simple paths discovered
between them.
"""

from typing import Dict, Iterable, Iterator, List, Tuple

from trustprop.exceptions import CorruptIndexError
from trustprop.models.graph import TrustGraph

Pair = Tuple[int, int]
Path = Tuple[int, ...]


class PathIndex:
    """Per-pair store of discovered simple paths (insertion order preserved)."""

    def __init__(self):
        self._paths: Dict[Pair, List[Path]] = {}

    def add(self, path: Path) -> None:
        """Append ``path`` under the key (first node, last node)."""
        self._paths.setdefault((path[0], path[-1]), []).append(tuple(path))

    def add_if_absent(self, path: Path) -> bool:
        """Store ``path`` only if its pair has no entry yet; report whether it was stored."""
        key = (path[0], path[-1])
        if key in self._paths:
            return False
        self._paths[key] = [tuple(path)]
        return True

    def paths(self, src: int, dst: int) -> List[Path]:
        return self._paths.get((src, dst), [])

    def keys(self) -> Iterable[Pair]:
        return self._paths.keys()

    def items(self) -> Iterator[Tuple[Pair, List[Path]]]:
        return iter(self._paths.items())

    def path_count(self) -> int:
        return sum(len(paths) for paths in self._paths.values())

    def pair_count(self) -> int:
        return len(self._paths)

    def merge(self, other: "PathIndex") -> None:
        """
        Fold another index into this one.

        Lists under a shared key are concatenated; workers that own disjoint
        source sets never share keys.
        """
        for key, paths in other._paths.items():
            self._paths.setdefault(key, []).extend(paths)

    def validate(self, graph: TrustGraph, l_max: int) -> None:
        """
        Check every stored path edge by edge against ``graph``.

        Raises:
            CorruptIndexError: On the first invalid key or path
        """
        for (src, dst), paths in self._paths.items():
            self.validate_entry(graph, l_max, src, dst, paths)

    @staticmethod
    def validate_entry(graph: TrustGraph, l_max: int, src: int, dst: int,
                       paths: List[Path]) -> None:
        if src == dst:
            raise CorruptIndexError(f"Key <{src},{dst}> pairs a node with itself")
        if not (0 <= src < graph.node_count and 0 <= dst < graph.node_count):
            raise CorruptIndexError(f"Key <{src},{dst}> references unknown nodes")
        if graph.has_edge(src, dst):
            raise CorruptIndexError(f"Key <{src},{dst}> is already a direct edge")
        if not paths:
            raise CorruptIndexError(f"Key <{src},{dst}> has no paths")
        for path in paths:
            length = len(path) - 1
            if not 2 <= length <= l_max:
                raise CorruptIndexError(f"Path {path} has length {length}, outside [2, {l_max}]")
            if path[0] != src or path[-1] != dst:
                raise CorruptIndexError(f"Path {path} filed under <{src},{dst}>")
            if len(set(path)) != len(path):
                raise CorruptIndexError(f"Path {path} repeats a node")
            for a, b in zip(path, path[1:]):
                if not (0 <= a < graph.node_count and 0 <= b < graph.node_count and graph.has_edge(a, b)):
                    raise CorruptIndexError(f"Path {path} uses missing edge {a} -> {b}")

    def to_lines(self) -> List[str]:
        """Deterministic text form: one line of space-separated node ids per path, keys sorted."""
        lines = []
        for key in sorted(self._paths):
            for path in self._paths[key]:
                lines.append(" ".join(str(node) for node in path))
        return lines

    def __contains__(self, key: Pair) -> bool:
        return key in self._paths

    def __len__(self) -> int:
        return len(self._paths)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PathIndex) and self._paths == other._paths

    def __repr__(self) -> str:
        return f"PathIndex(pairs={self.pair_count()}, paths={self.path_count()})"


def path_count(index: PathIndex) -> int:
    """Total number of stored paths across all pairs."""
    return index.path_count()
