"""Finitized augmentability and independence checkers.

Condition (A) — every matching admits an augmenting path from every
uncovered vertex — is checked both by definition (full enumeration) and
through perfect-matching existence; on finite graphs the two agree, and
that agreement is itself a tested theorem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CapExceededError,
    NotPerfectComponentError,
    PreconditionViolatedError,
)
from .graph import DisjointUnion, Graph, Matching, disjoint_union
from .matching import (
    DEFAULT_MATCHING_CAP,
    enumerate_matchings,
    find_augmenting_path,
    maximum_matching,
    perfect_matching,
)

#: Definitional mode refuses graphs above this size unless the cap is raised,
#: because the matching count grows doubly exponentially.
DEFINITIONAL_VERTEX_LIMIT = 12


def _all_matchings(graph: Graph, cap: int) -> tuple[Matching, ...]:
    result = enumerate_matchings(graph, cap)
    if result.truncated:
        raise CapExceededError(
            f"graph has more than {cap} matchings; raise the cap to proceed"
        )
    return result.matchings


def check_condition_a(
    graph: Graph, mode: str = "fast", cap: int = DEFAULT_MATCHING_CAP
) -> bool:
    """Whether every matching admits an augmenting path from every uncovered vertex.

    ``definitional`` enumerates all matchings and searches for the paths;
    ``fast`` tests perfect-matching existence instead.  The two modes agree
    on every finite graph.
    """
    if mode == "fast":
        return perfect_matching(graph) is not None
    if mode != "definitional":
        raise ValueError(f"unknown mode {mode!r}")
    if len(graph.vertices) > DEFINITIONAL_VERTEX_LIMIT and cap == DEFAULT_MATCHING_CAP:
        raise CapExceededError(
            f"definitional mode refuses graphs above {DEFINITIONAL_VERTEX_LIMIT} "
            "vertices unless the cap is raised explicitly"
        )
    for m in _all_matchings(graph, cap):
        for s in sorted(graph.vertices - m.support):
            if find_augmenting_path(graph, m, s) is None:
                return False
    return True


def is_independent(graph: Graph, matching: Matching) -> bool:
    """True when no uncovered vertex starts a proper augmenting path.

    A proper augmenting path flips at least one matching edge; matchings
    without one are stable under augmentation.
    """
    if not matching.edges <= graph.edges:
        raise ValueError("matching uses edges outside the graph")
    for s in sorted(graph.vertices - matching.support):
        if find_augmenting_path(graph, matching, s, proper_only=True) is not None:
            return False
    return True


def maximal_support_matching(graph: Graph) -> Matching:
    """Matching whose support no other matching's support properly contains.

    On finite graphs support size is twice edge count, so any maximum
    matching qualifies.
    """
    return maximum_matching(graph)


def maximal_independent_matching(
    graph: Graph, cap: int = DEFAULT_MATCHING_CAP
) -> Matching:
    """Greedy maximal independent matching over vertices in id order.

    At each vertex g the least independent matching (in enumeration order)
    covering the current support plus g is adopted if one exists.  No
    independent matching's support strictly contains the result's support.
    """
    matchings = _all_matchings(graph, cap)
    independent_cache: dict[frozenset, bool] = {}

    def independent(m: Matching) -> bool:
        cached = independent_cache.get(m.edges)
        if cached is None:
            cached = is_independent(graph, m)
            independent_cache[m.edges] = cached
        return cached

    current = Matching.empty()
    for g in graph.sorted_vertices():
        target = current.support | {g}
        for candidate in matchings:
            if target <= candidate.support and independent(candidate):
                current = candidate
                break
    return current


def has_nonempty_independent_subgraph(
    graph: Graph, cap: int = DEFAULT_MATCHING_CAP
) -> bool:
    """True when some nonempty matching of the graph is independent.

    The support of such a matching induces an independent subgraph.  On
    finite graphs this is equivalent to having at least one edge, which the
    test suite verifies against this definitional search.
    """
    for m in _all_matchings(graph, cap):
        if m.edges and is_independent(graph, m):
            return True
    return False


@dataclass(frozen=True)
class StarReport:
    """Both sides of the emptiness principle for a finite graph."""

    hypothesis_holds: bool
    conclusion_holds: bool

    def to_json(self) -> dict:
        return {
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
        }


def check_star(graph: Graph, cap: int = DEFAULT_MATCHING_CAP) -> StarReport:
    """Report on: condition (A) plus no nonempty independent matching implies empty.

    On finite graphs the implication is provably trivial; the checker
    exists to validate the machinery it is built from.
    """
    hypothesis = check_condition_a(graph, "fast") and not has_nonempty_independent_subgraph(
        graph, cap
    )
    conclusion = not graph.vertices
    return StarReport(hypothesis, conclusion)


def sequential_pm(graphs: list[Graph]) -> list[Matching | None]:
    """Perfect matching per graph, None where none exists."""
    return [perfect_matching(g) for g in graphs]


def collection_pm(graphs: list[Graph], matchings: list[Matching]) -> Matching:
    """Union of per-component perfect matchings, retagged into the disjoint union.

    Raises NotPerfectComponentError when some matching is not a perfect
    matching of its component.
    """
    if len(graphs) != len(matchings):
        raise ValueError("need exactly one matching per graph")
    union = disjoint_union(graphs)
    edges: list[tuple[int, int]] = []
    for k, (g, m) in enumerate(zip(graphs, matchings)):
        if not m.edges <= g.edges or m.support != g.vertices:
            raise NotPerfectComponentError(
                f"matching {k} is not a perfect matching of graph {k}"
            )
        for u, v in m.sorted_edges():
            edges.append((union.embed(k, u), union.embed(k, v)))
    return Matching.build(edges)


def condition_a_preserved_after_independent_removal(
    graph: Graph, matching: Matching, cap: int = DEFAULT_MATCHING_CAP
) -> bool:
    """Check condition (A) on the graph left after removing an independent matching.

    Preconditions (checked): the graph satisfies condition (A) and the
    matching is independent in it.  Under them the result is always True;
    the return value exists so the lemma can be tested.
    """
    if not matching.edges <= graph.edges:
        raise PreconditionViolatedError("matching uses edges outside the graph")
    if not check_condition_a(graph, "fast"):
        raise PreconditionViolatedError("graph does not satisfy condition (A)")
    if not is_independent(graph, matching):
        raise PreconditionViolatedError("matching is not independent")
    remainder = graph.induced(graph.vertices - matching.support)
    return check_condition_a(remainder, "fast")


def analysis_report(graph: Graph, matching: Matching | None = None,
                    cap: int = DEFAULT_MATCHING_CAP) -> dict:
    """JSON-ready summary: condition (A), independence, MIM/MM supports, star."""
    report: dict = {"condition_A": check_condition_a(graph, "fast")}
    if matching is not None:
        report["independent"] = is_independent(graph, matching)
    report["mim_support"] = sorted(maximal_independent_matching(graph, cap).support)
    report["mm_support"] = sorted(maximal_support_matching(graph).support)
    report["star"] = check_star(graph, cap).to_json()
    return report


__all__ = [
    "DEFINITIONAL_VERTEX_LIMIT",
    "StarReport",
    "analysis_report",
    "check_condition_a",
    "check_star",
    "collection_pm",
    "condition_a_preserved_after_independent_removal",
    "has_nonempty_independent_subgraph",
    "is_independent",
    "maximal_independent_matching",
    "maximal_support_matching",
    "sequential_pm",
]
