"""Matching algorithms: enumeration oracle, blossom search, augmenting paths.

The enumeration routines are the ground truth the faster algorithms are
tested against, so they stay as direct as possible.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import BudgetExceededError, CoveredStartError, NoNodeError
from .graph import (
    DEFAULT_STEP_BUDGET,
    Graph,
    LazyGraph,
    Matching,
    Path,
    canonical_edge,
)

#: Default cap on how many matchings an enumeration may materialize.
DEFAULT_MATCHING_CAP = 100_000


@dataclass(frozen=True)
class EnumerationResult:
    """All matchings found, flagged when the cap cut the list short."""

    matchings: tuple[Matching, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.matchings)

    def __len__(self) -> int:
        return len(self.matchings)


def enumerate_matchings(graph: Graph, cap: int = DEFAULT_MATCHING_CAP) -> EnumerationResult:
    """Every matching of the graph (including the empty one), lexicographically.

    Matchings are ordered by their sorted edge sequence.  When more than
    ``cap`` matchings exist the first ``cap`` are returned with the
    truncation flag set.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    edges = graph.sorted_edges()
    found: list[Matching] = [Matching.empty()]
    chosen: list[tuple[int, int]] = []
    used: set[int] = set()
    truncated = False

    def extend(start: int) -> bool:
        nonlocal truncated
        for k in range(start, len(edges)):
            u, v = edges[k]
            if u in used or v in used:
                continue
            if len(found) >= cap:
                truncated = True
                return False
            chosen.append(edges[k])
            used.add(u)
            used.add(v)
            found.append(Matching(frozenset(chosen)))
            deeper = extend(k + 1)
            chosen.pop()
            used.discard(u)
            used.discard(v)
            if not deeper:
                return False
        return True

    extend(0)
    return EnumerationResult(tuple(found), truncated)


def perfect_matchings_up_to(graph: Graph, limit: int) -> list[Matching]:
    """Up to ``limit`` perfect matchings, found by min-degree backtracking.

    If fewer than ``limit`` matchings are returned the list is exhaustive.
    The search repeatedly matches a minimum-degree vertex, so graphs whose
    perfect matching is forced by pendant chains resolve without branching.
    """
    if limit <= 0:
        return []
    verts = graph.vertices
    if len(verts) % 2 == 1:
        return []
    if not verts:
        return [Matching.empty()]
    adj: dict[int, set[int]] = {v: set(graph.adjacency[v]) for v in verts}
    alive: set[int] = set(verts)
    forced: list[int] = []
    found: list[Matching] = []
    chosen: list[tuple[int, int]] = []

    def pick() -> int:
        while forced:
            v = forced.pop()
            if v in alive and len(adj[v]) <= 1:
                return v
        return min(alive, key=lambda v: (len(adj[v]), v))

    def detach(v: int) -> None:
        alive.remove(v)
        for w in adj[v]:
            ws = adj[w]
            ws.discard(v)
            if len(ws) <= 1 and w in alive:
                forced.append(w)

    def attach(v: int) -> None:
        for w in adj[v]:
            adj[w].add(v)
        alive.add(v)

    def search() -> bool:
        if not alive:
            found.append(Matching(frozenset(chosen)))
            return len(found) < limit
        v = pick()
        partners = sorted(adj[v])
        for u in partners:
            detach(v)
            detach(u)
            chosen.append(canonical_edge(v, u))
            keep_going = search()
            chosen.pop()
            attach(u)
            attach(v)
            if not keep_going:
                return False
        return True

    depth_needed = len(verts) + 100
    old_limit = sys.getrecursionlimit()
    if old_limit < depth_needed:
        sys.setrecursionlimit(depth_needed)
    try:
        search()
    finally:
        if old_limit < depth_needed:
            sys.setrecursionlimit(old_limit)
    return found


def maximum_matching(graph: Graph) -> Matching:
    """Maximum-cardinality matching via blossom contraction.

    Vertices are scanned in increasing id order with sorted adjacency, so
    the result is deterministic.  Correctness is cross-checked against
    :func:`enumerate_matchings` in the test suite.
    """
    order = graph.sorted_vertices()
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    adj = [[index[w] for w in graph.adjacency[v]] for v in order]
    match = [-1] * n
    for u, v in graph.sorted_edges():
        iu, iv = index[u], index[v]
        if match[iu] == -1 and match[iv] == -1:
            match[iu] = iv
            match[iv] = iu
    parent = [-1] * n
    base = list(range(n))

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def mark_blossom_path(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting(root: int) -> int:
        nonlocal parent, base
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    stem = lowest_common_base(v, to)
                    in_blossom = [False] * n
                    mark_blossom_path(v, stem, to, in_blossom)
                    mark_blossom_path(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1:
            end = find_augmenting(v)
            while end != -1:
                prev = parent[end]
                nxt = match[prev]
                match[end] = prev
                match[prev] = end
                end = nxt
    return Matching(
        frozenset((order[i], order[match[i]]) for i in range(n) if i < match[i])
    )


def perfect_matching(graph: Graph) -> Matching | None:
    """A perfect matching if one exists, else None."""
    m = maximum_matching(graph)
    return m if m.support == graph.vertices else None


def find_augmenting_path(
    graph: Graph,
    matching: Matching,
    start: int,
    proper_only: bool = False,
    max_len: int | None = None,
) -> Path | None:
    """Exhaustive search for an alternating path from an uncovered vertex.

    The path alternates starting outside the matching and ends at an
    uncovered vertex; with ``proper_only`` it must also flip at least one
    matching edge.  Search is depth first with sorted neighbor order, so
    the returned path is deterministic.  ``max_len`` caps the edge count.
    """
    if start not in graph.vertices:
        raise ValueError(f"vertex {start} not in the graph")
    partner = matching.partner
    if start in partner:
        raise CoveredStartError(f"vertex {start} is already covered")
    limit = len(graph.vertices) if max_len is None else min(max_len, len(graph.vertices))
    trail = [start]
    on_trail = {start}

    def dfs(u: int, need_matched: bool, matched_used: int) -> bool:
        if len(trail) - 1 >= limit:
            return False
        if need_matched:
            w = partner.get(u)
            candidates = () if w is None else (w,)
        else:
            candidates = tuple(w for w in graph.adjacency[u] if partner.get(u) != w)
        for w in candidates:
            if w in on_trail:
                continue
            trail.append(w)
            on_trail.add(w)
            if not need_matched and w not in partner:
                if not proper_only or matched_used > 0:
                    return True
                # uncovered endpoint reached too early: nothing extends through it
            elif dfs(w, not need_matched, matched_used + (1 if need_matched else 0)):
                return True
            trail.pop()
            on_trail.discard(w)
        return False

    if dfs(start, False, 0):
        return Path(tuple(trail))
    return None


@dataclass(frozen=True)
class PartialMatchingNode:
    """Partner sequence a_0..a_n whose collapsed edge set matches 0..n.

    The edge set {{i, a_i}} (duplicates collapsed) must be a matching
    covering {0..n} together with every partner.
    """

    partners: tuple[int, ...]

    def __post_init__(self):
        edges = set()
        for i, a in enumerate(self.partners):
            edges.add(canonical_edge(i, a))
        seen: set[int] = set()
        for u, v in edges:
            if u in seen or v in seen:
                raise ValueError("partner sequence does not collapse to a matching")
            seen.add(u)
            seen.add(v)

    @cached_property
    def matching(self) -> Matching:
        return Matching.build(
            canonical_edge(i, a) for i, a in enumerate(self.partners)
        )

    def prefix(self, depth: int) -> PartialMatchingNode:
        """Restriction to partners a_0..a_depth."""
        return PartialMatchingNode(self.partners[: depth + 1])

    def __len__(self) -> int:
        return len(self.partners)


def bounded_pm_search(
    lazy: LazyGraph, depth: int, step_budget: int = DEFAULT_STEP_BUDGET
) -> PartialMatchingNode:
    """Deterministic backtracking search for a partner sequence a_0..a_depth.

    Candidate partners of vertex i are probed in increasing order up to the
    bound h(i), so branching is finite and the returned node is the
    lexicographically least one.  Raises NoNodeError when no matching
    covers {0..depth}.
    """
    if lazy.bound is None:
        raise ValueError("bounded search requires a bound function")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    probes = 0

    def candidates(i: int) -> list[int]:
        nonlocal probes
        out = []
        for y in range(lazy.bound(i) + 1):
            if y == i:
                continue
            probes += 1
            if probes > step_budget:
                raise BudgetExceededError(
                    f"probe budget {step_budget} exhausted at depth {i}"
                )
            if lazy.adjacent(i, y):
                out.append(y)
        return out

    partners: list[int] = []
    cover: dict[int, int] = {}

    def place(i: int) -> bool:
        if i > depth:
            return True
        if i in cover:
            # i was matched earlier as someone's partner; the duplicate edge
            # is the only consistent choice.
            partners.append(cover[i])
            if place(i + 1):
                return True
            partners.pop()
            return False
        for y in candidates(i):
            if y in cover:
                continue
            cover[i] = y
            cover[y] = i
            partners.append(y)
            if place(i + 1):
                return True
            partners.pop()
            del cover[i]
            del cover[y]
        return False

    if not place(0):
        raise NoNodeError(f"no matching covers vertices 0..{depth}")
    return PartialMatchingNode(tuple(partners))
