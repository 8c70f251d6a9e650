"""Finite graphs, matchings, paths, and oracle-presented lazy graphs.

All values are immutable after construction and every operation is a pure
function of its inputs, so values can be shared freely.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    EnumerationDivergesError,
    NotAugmentingError,
    OutOfRangeVertexError,
    SelfLoopError,
)

Edge = tuple[int, int]

#: Default number of oracle probes allowed before a lazy-graph operation gives up.
DEFAULT_STEP_BUDGET = 1_000_000


def canonical_edge(u: int, v: int) -> Edge:
    """Order an edge pair smaller id first, rejecting self-loops."""
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph over non-negative integer vertex ids.

    Edges are stored canonically (smaller id first) with no duplicates,
    no self-loops, and every endpoint in the vertex set.
    """

    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge {(u, v)} is not in canonical order")
            if u not in self.vertices or v not in self.vertices:
                raise OutOfRangeVertexError(f"edge {(u, v)} leaves the vertex set")
        for v in self.vertices:
            if v < 0:
                raise OutOfRangeVertexError(f"negative vertex id {v}")

    @staticmethod
    def build(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
        """Construct a graph, canonicalizing edge order and collapsing duplicates."""
        vs = frozenset(vertices)
        es = frozenset(canonical_edge(u, v) for u, v in edges)
        return Graph(vs, es)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        """Sorted neighbor lists, one entry per vertex."""
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in nbrs.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.edges

    def induced(self, keep: Iterable[int]) -> Graph:
        """Vertex-induced subgraph on ``keep`` (which must be a subset of V)."""
        ks = frozenset(keep)
        extra = ks - self.vertices
        if extra:
            raise OutOfRangeVertexError(f"vertices {sorted(extra)} not in the graph")
        return Graph(ks, frozenset(e for e in self.edges if e[0] in ks and e[1] in ks))

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_dense(self) -> bool:
        """True when the vertex set is exactly 0..n-1."""
        return self.vertices == frozenset(range(len(self.vertices)))

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Matching:
    """Set of vertex-disjoint edges."""

    edges: frozenset[Edge]

    def __post_init__(self):
        seen: set[int] = set()
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"matching edge {(u, v)} not in canonical order")
            if u in seen or v in seen:
                raise ValueError(f"vertex shared by two matching edges near {(u, v)}")
            seen.add(u)
            seen.add(v)

    @staticmethod
    def build(edges: Iterable[tuple[int, int]]) -> Matching:
        return Matching(frozenset(canonical_edge(u, v) for u, v in edges))

    @staticmethod
    def empty() -> Matching:
        return Matching(frozenset())

    @cached_property
    def support(self) -> frozenset[int]:
        """Set of vertices covered by the matching."""
        return frozenset(v for e in self.edges for v in e)

    @cached_property
    def partner(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def covers(self, v: int) -> bool:
        return v in self.support

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Path:
    """Finite injective vertex sequence; adjacency is checked by consumers."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path repeats a vertex")

    def edges(self) -> list[Edge]:
        return [canonical_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def first(self) -> int:
        return self.vertices[0]

    def last(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class LazyGraph:
    """Oracle-presented graph: adjacency predicate plus neighbor enumeration.

    ``bound``, when present, must satisfy h(x) >= y for every edge {x, y};
    it makes truncation and tree search total without consuming the
    (possibly infinite) neighbor stream.
    """

    adjacent: Callable[[int, int], bool]
    neighbors: Callable[[int], Iterable[int]]
    bound: Callable[[int], int] | None = None


class VertexRegistry:
    """Assigns dense ids 0, 1, ... to hashable labels in first-seen order.

    Composite constructions label vertices hierarchically and flatten them
    through a registry so that output ids are reproducible.
    """

    def __init__(self):
        self._ids: dict[object, int] = {}

    def id(self, label: object) -> int:
        return self._ids.setdefault(label, len(self._ids))

    def __len__(self) -> int:
        return len(self._ids)

    def __contains__(self, label: object) -> bool:
        return label in self._ids

    def labels(self) -> list[object]:
        return list(self._ids)


@dataclass(frozen=True)
class DisjointUnion:
    """Disjoint union of graphs plus the origin of every fresh vertex id."""

    graph: Graph
    origins: dict[int, tuple[int, int]] = field(compare=False)

    def embed(self, component: int, old: int) -> int:
        """Fresh id of vertex ``old`` from input graph ``component``."""
        return self._reverse[(component, old)]

    @cached_property
    def _reverse(self) -> dict[tuple[int, int], int]:
        return {origin: new for new, origin in self.origins.items()}

    def component_vertices(self, component: int) -> frozenset[int]:
        return frozenset(
            new for new, (k, _) in self.origins.items() if k == component
        )


def make_graph(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertices 0..vertex_count-1 with the given edges.

    Duplicate pairs (in either orientation) collapse silently.
    """
    if vertex_count < 0:
        raise OutOfRangeVertexError("vertex count must be non-negative")
    edges = set()
    for u, v in edge_list:
        e = canonical_edge(u, v)
        if e[0] < 0 or e[1] >= vertex_count:
            raise OutOfRangeVertexError(
                f"edge {(u, v)} outside vertex range 0..{vertex_count - 1}"
            )
        edges.add(e)
    return Graph(frozenset(range(vertex_count)), frozenset(edges))


def disjoint_union(graphs: list[Graph]) -> DisjointUnion:
    """Disjoint union; vertices are retagged (component, old id) and flattened.

    The registry walks components in order and each component's vertices in
    sorted order, so the output ids are deterministic.
    """
    registry = VertexRegistry()
    origins: dict[int, tuple[int, int]] = {}
    vertices: list[int] = []
    edges: list[Edge] = []
    for k, g in enumerate(graphs):
        for v in g.sorted_vertices():
            new = registry.id((k, v))
            origins[new] = (k, v)
            vertices.append(new)
        for u, v in g.sorted_edges():
            edges.append((registry.id((k, u)), registry.id((k, v))))
    return DisjointUnion(Graph.build(vertices, edges), origins)


def augment(matching: Matching, path: Path) -> Matching:
    """Symmetric difference of a matching with an augmenting path.

    The path must start and end at uncovered vertices and its edges must
    alternate, beginning and ending outside the matching.
    """
    if len(path) < 2:
        raise NotAugmentingError("augmenting path needs at least one edge")
    if matching.covers(path.first()) or matching.covers(path.last()):
        raise NotAugmentingError("augmenting path endpoints must be uncovered")
    edges = path.edges()
    for i, e in enumerate(edges):
        inside = e in matching.edges
        if inside != (i % 2 == 1):
            raise NotAugmentingError(
                f"edge {e} breaks the alternation pattern at position {i}"
            )
    if len(edges) % 2 == 0:
        raise NotAugmentingError("augmenting path must have an odd number of edges")
    return Matching(matching.edges.symmetric_difference(edges))


def truncate(
    lazy: LazyGraph, vertex_bound: int, step_budget: int = DEFAULT_STEP_BUDGET
) -> Graph:
    """Induced subgraph of a lazy graph on the ids 0..vertex_bound-1.

    Every oracle probe counts against ``step_budget``; without a bound
    function the neighbor stream of each vertex must terminate on its own.
    """
    steps = 0
    edges: set[Edge] = set()
    for x in range(vertex_bound):
        if lazy.bound is not None:
            limit = min(vertex_bound - 1, lazy.bound(x))
            for y in range(limit + 1):
                steps += 1
                if steps > step_budget:
                    raise EnumerationDivergesError(
                        f"probe budget {step_budget} exhausted at vertex {x}"
                    )
                if y != x and lazy.adjacent(x, y):
                    edges.add(canonical_edge(x, y))
        else:
            for y in lazy.neighbors(x):
                steps += 1
                if steps > step_budget:
                    raise EnumerationDivergesError(
                        f"probe budget {step_budget} exhausted at vertex {x}"
                    )
                if y != x and 0 <= y < vertex_bound:
                    edges.add(canonical_edge(x, y))
    return Graph(frozenset(range(vertex_bound)), frozenset(edges))
