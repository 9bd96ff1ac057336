"""Undirected simple graphs: ingestion, triangles, components, removal.

Vertices carry arbitrary string labels externally and contiguous 0-based ids
internally. Graph and TriangleSet instances are immutable once built, so they
are safe to share across threads.
"""

from __future__ import annotations

import io
import warnings
from bisect import bisect_left
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO


class EdgeListParseError(ValueError):
    """A line of edge-list text could not be parsed."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GraphValidationError(ValueError):
    """Input violates a structural requirement (self-loop, empty graph, ...)."""


class DuplicateEdgeWarning(UserWarning):
    """Raised (as a warning) when dedupe drops repeated or self-loop lines."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph.

    labels[i] is the external label of internal vertex i; adjacency[i] is the
    sorted tuple of neighbors of i; edges holds every edge once as (i, j) with
    i < j, sorted.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    _label_to_id: dict = field(init=False, repr=False)

    def __post_init__(self):
        index = {lab: i for i, lab in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise GraphValidationError("labels are not unique")
        object.__setattr__(self, "_label_to_id", index)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def id_of(self, label: str) -> int:
        try:
            return self._label_to_id[label]
        except KeyError:
            raise GraphValidationError(f"unknown vertex label {label!r}") from None

    def has_edge(self, i: int, j: int) -> bool:
        a = self.adjacency[i]
        pos = bisect_left(a, j)
        return pos < len(a) and a[pos] == j

    @staticmethod
    def from_edge_labels(pairs: Iterable[tuple[str, str]]) -> "Graph":
        """Build a graph from (label, label) pairs, ids in first-appearance order."""
        labels: list[str] = []
        index: dict[str, int] = {}

        def intern(lab: str) -> int:
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            return index[lab]

        edge_set: set[tuple[int, int]] = set()
        for a, b in pairs:
            u, v = intern(a), intern(b)
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {a!r}")
            edge_set.add((min(u, v), max(u, v)))
        if not labels:
            raise GraphValidationError("empty graph")
        adj: list[list[int]] = [[] for _ in labels]
        for u, v in edge_set:
            adj[u].append(v)
            adj[v].append(u)
        return Graph(
            labels=tuple(labels),
            adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adj),
            edges=tuple(sorted(edge_set)),
        )


def load_edge_list(source: str | Path | TextIO, *, dedupe: bool = False) -> Graph:
    """Parse edge-list text into a Graph.

    Every non-comment line holds two whitespace-separated vertex labels;
    ``#`` starts a comment (whole-line or trailing). Labels are mapped to
    0-based internal ids in first-appearance order.

    With dedupe=True, repeated edges and self-loop lines are skipped and
    reported through a DuplicateEdgeWarning; otherwise both are errors.
    """
    if isinstance(source, (str, Path)):
        stream: TextIO = io.StringIO(Path(source).read_text())
    else:
        stream = source

    labels: list[str] = []
    index: dict[str, int] = {}

    def intern(lab: str) -> int:
        if lab not in index:
            index[lab] = len(labels)
            labels.append(lab)
        return index[lab]

    edge_set: set[tuple[int, int]] = set()
    duplicates = 0
    self_loops = 0
    for lineno, raw in enumerate(stream, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        tokens = text.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected two labels, got {len(tokens)}: {text!r}", lineno
            )
        u, v = intern(tokens[0]), intern(tokens[1])
        if u == v:
            if dedupe:
                self_loops += 1
                continue
            raise GraphValidationError(
                f"line {lineno}: self-loop at vertex {tokens[0]!r}"
            )
        key = (min(u, v), max(u, v))
        if key in edge_set:
            if dedupe:
                duplicates += 1
                continue
            raise GraphValidationError(
                f"line {lineno}: duplicate edge {tokens[0]!r} -- {tokens[1]!r}"
            )
        edge_set.add(key)

    if not labels:
        raise GraphValidationError("empty graph: no edges or vertices found")
    if duplicates or self_loops:
        parts = []
        if duplicates:
            parts.append(f"{duplicates} duplicate edge(s)")
        if self_loops:
            parts.append(f"{self_loops} self-loop line(s)")
        warnings.warn("dropped " + " and ".join(parts), DuplicateEdgeWarning, stacklevel=2)

    adj: list[list[int]] = [[] for _ in labels]
    for u, v in edge_set:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(
        labels=tuple(labels),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adj),
        edges=tuple(sorted(edge_set)),
    )


def dump_edge_list(graph: Graph) -> str:
    """Serialize back to edge-list text; re-loading yields the same graph."""
    return "".join(
        f"{graph.labels[u]} {graph.labels[v]}\n" for u, v in graph.edges
    )


def connected_components(graph: Graph) -> list[set[int]]:
    """Partition vertex ids by reachability, ordered by smallest member id."""
    seen = [False] * graph.n
    components: list[set[int]] = []
    for start in range(graph.n):
        if seen[start]:
            continue
        comp = {start}
        seen[start] = True
        frontier = [start]
        while frontier:
            nxt: list[int] = []
            for u in frontier:
                for w in graph.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        nxt.append(w)
            frontier = nxt
        components.append(comp)
    return components


def is_connected(graph: Graph) -> bool:
    return len(connected_components(graph)) == 1


@dataclass(frozen=True, eq=False)
class TriangleSet:
    """All 3-cliques of a graph, canonically ordered.

    triangles holds each clique once as (p, q, r) with p < q < r, sorted;
    incidence[i] lists the pairs (j, k), j < k, completing a triangle with i,
    sorted. Σ_i len(incidence[i]) == 3 * len(triangles).
    """

    triangles: tuple[tuple[int, int, int], ...]
    incidence: tuple[tuple[tuple[int, int], ...], ...]

    def __len__(self) -> int:
        return len(self.triangles)

    def count_per_vertex(self) -> list[int]:
        """T(i): number of triangles containing each vertex."""
        return [len(pairs) for pairs in self.incidence]


def enumerate_triangles(graph: Graph) -> TriangleSet:
    """List every 3-clique once via the degree-ordered forward algorithm.

    Vertices are processed in non-increasing degree order (ties by id); each
    triangle is reported exactly once in O(m^(3/2)) intersections. Output is
    canonically sorted, so the result is independent of processing order.
    """
    n = graph.n
    order = sorted(range(n), key=lambda v: (-len(graph.adjacency[v]), v))
    rank = [0] * n
    for pos, v in enumerate(order):
        rank[v] = pos

    forward: list[set[int]] = [set() for _ in range(n)]
    triangles: list[tuple[int, int, int]] = []
    for v in order:
        for u in graph.adjacency[v]:
            if rank[u] <= rank[v]:
                continue
            for w in forward[v] & forward[u]:
                triangles.append(tuple(sorted((u, v, w))))
            forward[u].add(v)
    triangles.sort()

    incidence: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for p, q, r in triangles:
        incidence[p].append((q, r))
        incidence[q].append((p, r))
        incidence[r].append((p, q))
    return TriangleSet(
        triangles=tuple(triangles),
        incidence=tuple(tuple(sorted(pairs)) for pairs in incidence),
    )


def remove_vertices(graph: Graph, labels: Iterable[str]) -> Graph:
    """Induced subgraph on the surviving vertices; their labels are kept."""
    doomed = {graph.id_of(lab) for lab in labels}
    survivors = [i for i in range(graph.n) if i not in doomed]
    if not survivors:
        raise GraphValidationError("removal would leave an empty graph")
    new_id = {old: new for new, old in enumerate(survivors)}
    adj: list[list[int]] = [[] for _ in survivors]
    edges: list[tuple[int, int]] = []
    for u, v in graph.edges:
        if u in doomed or v in doomed:
            continue
        a, b = new_id[u], new_id[v]
        adj[a].append(b)
        adj[b].append(a)
        edges.append((min(a, b), max(a, b)))
    return Graph(
        labels=tuple(graph.labels[i] for i in survivors),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adj),
        edges=tuple(sorted(edges)),
    )


@dataclass(frozen=True, eq=False)
class DegreeTriangleStats:
    """Per-vertex degree D(i), triangle count T(i), and neighbor triangle sum
    NT(i) = Σ_{j adjacent to i} T(j)."""

    labels: tuple[str, ...]
    degree: tuple[int, ...]
    triangle_count: tuple[int, ...]
    neighbor_triangles: tuple[int, ...]

    def row(self, label: str) -> tuple[int, int, int]:
        try:
            i = self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labeled {label!r}") from None
        return (self.degree[i], self.triangle_count[i], self.neighbor_triangles[i])


def degree_and_triangle_stats(graph: Graph, triangles: TriangleSet) -> DegreeTriangleStats:
    """Compute D(i), T(i), NT(i) for every vertex of the graph."""
    t = triangles.count_per_vertex()
    nt = [sum(t[j] for j in graph.adjacency[i]) for i in range(graph.n)]
    return DegreeTriangleStats(
        labels=graph.labels,
        degree=tuple(graph.degrees()),
        triangle_count=tuple(t),
        neighbor_triangles=tuple(nt),
    )
