"""
Trust graph models.

Defines the directed, vertex- and edge-weighted social graph and its inferred
extension, which records which edges came from trust propagation.
"""

from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from trustprop.exceptions import UnknownNodeError, ValidationError

Edge = Tuple[int, int, float]


class TrustGraph:
    """
    Directed social graph over dense integer node ids ``0..n-1``.

    Each edge carries a trust weight in [0, 1] and each node an influence
    weight (theta) >= 0. Successor lists are kept sorted ascending so every
    traversal built on them is deterministic.
    """

    def __init__(self, node_count: int, labels: Optional[Sequence[str]] = None):
        """
        Initialize an edgeless graph.

        Args:
            node_count: Number of nodes; ids are 0..node_count-1
            labels: Optional raw dataset id per dense node id

        Raises:
            ValidationError: If node_count is negative or labels do not match
        """
        if not isinstance(node_count, int) or node_count < 0:
            raise ValidationError("Node count must be a non-negative integer")
        if labels is not None and len(labels) != node_count:
            raise ValidationError("Label table must have one entry per node")

        self._succ: List[Dict[int, float]] = [{} for _ in range(node_count)]
        self._sorted: List[Optional[List[int]]] = [None] * node_count
        self._indeg: List[int] = [0] * node_count
        self._theta: List[float] = [0.0] * node_count
        self._edge_count = 0
        self.labels: Optional[List[str]] = list(labels) if labels is not None else None

    @property
    def node_count(self) -> int:
        return len(self._succ)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def nodes(self) -> range:
        return range(self.node_count)

    def add_edge(self, src: int, dst: int, weight: float) -> None:
        """
        Insert or overwrite the directed edge src -> dst.

        Args:
            src: Truster node id
            dst: Trustee node id
            weight: Trust weight in [0, 1]

        Raises:
            ValidationError: On self-loops or out-of-range weights
            UnknownNodeError: If either node does not exist
        """
        self._check_node(src)
        self._check_node(dst)
        if src == dst:
            raise ValidationError(f"Self-loop on node {src} is not allowed")
        if not 0.0 <= weight <= 1.0:
            raise ValidationError(f"Trust weight {weight} outside [0, 1]")

        if dst not in self._succ[src]:
            self._indeg[dst] += 1
            self._edge_count += 1
            self._sorted[src] = None
        self._succ[src][dst] = float(weight)

    def remove_edge(self, src: int, dst: int) -> None:
        """Remove src -> dst. Only meant for the build phase."""
        self._check_node(src)
        if dst not in self._succ[src]:
            raise UnknownNodeError(f"No edge {src} -> {dst}")
        del self._succ[src][dst]
        self._indeg[dst] -= 1
        self._edge_count -= 1
        self._sorted[src] = None

    def has_edge(self, src: int, dst: int) -> bool:
        self._check_node(src)
        self._check_node(dst)
        return dst in self._succ[src]

    def weight(self, src: int, dst: int) -> float:
        try:
            return self._succ[src][dst]
        except (KeyError, IndexError):
            raise UnknownNodeError(f"No edge {src} -> {dst}") from None

    def successors(self, node: int) -> List[int]:
        """
        Out-neighbors of a node in ascending id order.

        The returned list is shared with the graph's cache; callers must not
        mutate it.
        """
        self._check_node(node)
        cached = self._sorted[node]
        if cached is None:
            cached = sorted(self._succ[node])
            self._sorted[node] = cached
        return cached

    def indegree(self, node: int) -> int:
        self._check_node(node)
        return self._indeg[node]

    def indegrees(self) -> List[int]:
        return list(self._indeg)

    def max_indegree(self) -> int:
        return max(self._indeg, default=0)

    def node_weight(self, node: int) -> float:
        self._check_node(node)
        return self._theta[node]

    def node_weights(self) -> List[float]:
        return list(self._theta)

    def set_node_weights(self, weights: Sequence[float]) -> None:
        """
        Replace every node's influence weight.

        Raises:
            ValidationError: If the list length differs or a weight is negative
        """
        if len(weights) != self.node_count:
            raise ValidationError("Node weight list must cover every node")
        if any(w < 0 for w in weights):
            raise ValidationError("Node weights must be non-negative")
        self._theta = [float(w) for w in weights]

    def edges(self) -> Iterator[Edge]:
        """Yield (src, dst, weight) in canonical (src, dst) order."""
        for src in self.nodes():
            row = self._succ[src]
            for dst in self.successors(src):
                yield src, dst, row[dst]

    def copy(self) -> "TrustGraph":
        clone = TrustGraph(self.node_count, self.labels)
        clone._copy_state_from(self)
        return clone

    def validate(self) -> None:
        """
        Validator pass over every structural invariant.

        Raises:
            ValidationError: On the first violated invariant
        """
        indeg = [0] * self.node_count
        count = 0
        for src, row in enumerate(self._succ):
            for dst, weight in row.items():
                if not 0 <= dst < self.node_count:
                    raise ValidationError(f"Edge {src} -> {dst} points outside the graph")
                if src == dst:
                    raise ValidationError(f"Self-loop on node {src}")
                if not 0.0 <= weight <= 1.0:
                    raise ValidationError(f"Edge {src} -> {dst} has weight {weight}")
                indeg[dst] += 1
                count += 1
        if indeg != self._indeg:
            raise ValidationError("Indegree cache disagrees with stored edges")
        if count != self._edge_count:
            raise ValidationError("Edge count cache disagrees with stored edges")
        if any(w < 0 for w in self._theta):
            raise ValidationError("Negative node weight")

    def label(self, node: int) -> str:
        self._check_node(node)
        return self.labels[node] if self.labels is not None else str(node)

    def _copy_state_from(self, other: "TrustGraph") -> None:
        self._succ = [dict(row) for row in other._succ]
        self._sorted = [list(s) if s is not None else None for s in other._sorted]
        self._indeg = list(other._indeg)
        self._theta = list(other._theta)
        self._edge_count = other._edge_count

    def _check_node(self, node: int) -> None:
        if not isinstance(node, int) or not 0 <= node < self.node_count:
            raise UnknownNodeError(f"Unknown node id: {node}")

    def __len__(self) -> int:
        return self.node_count

    def __repr__(self) -> str:
        return f"TrustGraph(nodes={self.node_count}, edges={self.edge_count})"


class InferredGraph(TrustGraph):
    """
    A TrustGraph whose edges are tagged original or inferred.

    Original edges are copied unchanged from the source graph; inferred edges
    carry the maximal path score found for their pair.
    """

    ORIGINAL = "original"
    INFERRED = "inferred"

    def __init__(self, node_count: int, labels: Optional[Sequence[str]] = None):
        super().__init__(node_count, labels)
        self._inferred: Set[Tuple[int, int]] = set()

    @classmethod
    def from_graph(cls, graph: TrustGraph) -> "InferredGraph":
        """Start an inferred graph as a copy of ``graph`` with all edges original."""
        inferred = cls(graph.node_count, graph.labels)
        inferred._copy_state_from(graph)
        return inferred

    def add_inferred_edge(self, src: int, dst: int, weight: float) -> None:
        """
        Add a propagated-trust edge.

        Raises:
            ValidationError: If the pair already has an original edge or the
                weight is outside (0, 1]
        """
        if self.has_edge(src, dst) and (src, dst) not in self._inferred:
            raise ValidationError(f"Original edge {src} -> {dst} cannot be overwritten")
        if not 0.0 < weight <= 1.0:
            raise ValidationError(f"Inferred weight {weight} outside (0, 1]")
        self.add_edge(src, dst, weight)
        self._inferred.add((src, dst))

    def remove_edge(self, src: int, dst: int) -> None:
        super().remove_edge(src, dst)
        self._inferred.discard((src, dst))

    def is_inferred(self, src: int, dst: int) -> bool:
        return (src, dst) in self._inferred

    def provenance(self, src: int, dst: int) -> str:
        if not self.has_edge(src, dst):
            raise UnknownNodeError(f"No edge {src} -> {dst}")
        return self.INFERRED if self.is_inferred(src, dst) else self.ORIGINAL

    def inferred_edges(self) -> Iterator[Edge]:
        """Yield only the inferred edges, in canonical order."""
        for src, dst, weight in self.edges():
            if (src, dst) in self._inferred:
                yield src, dst, weight

    @property
    def inferred_count(self) -> int:
        return len(self._inferred)

    def copy(self) -> "InferredGraph":
        clone = InferredGraph(self.node_count, self.labels)
        clone._copy_state_from(self)
        clone._inferred = set(self._inferred)
        return clone

    def validate(self) -> None:
        super().validate()
        for src, dst in self._inferred:
            if not self.has_edge(src, dst):
                raise ValidationError(f"Inferred tag on missing edge {src} -> {dst}")
            if self.weight(src, dst) <= 0.0:
                raise ValidationError(f"Inferred edge {src} -> {dst} has zero weight")

    def __repr__(self) -> str:
        return (f"InferredGraph(nodes={self.node_count}, edges={self.edge_count}, "
                f"inferred={self.inferred_count})")
