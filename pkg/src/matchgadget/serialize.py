"""JSON and DOT serialization for graphs, matchings, and coding marks.

Graph JSON: {"vertices": N, "edges": [[u, v], ...], "marks": {...}?} where
"vertices" is a count when the vertex set is dense 0..N-1 and an explicit
id list otherwise (the range gadget, induced subgraphs).
"""

from __future__ import annotations

from .errors import MatchGadgetError
from .gadgets import CodingGraph, validate_coding
from .graph import Graph, Matching


class FormatError(MatchGadgetError):
    """The JSON document does not describe a graph or matching."""


def graph_to_json(graph: Graph, marks: dict[str, int] | None = None) -> dict:
    out: dict = {
        "vertices": len(graph) if graph.is_dense() else graph.sorted_vertices(),
        "edges": [list(e) for e in graph.sorted_edges()],
    }
    if marks is not None:
        out["marks"] = dict(marks)
    return out


def graph_from_json(doc: dict) -> tuple[Graph, dict[str, int] | None]:
    if not isinstance(doc, dict):
        raise FormatError("graph document must be a JSON object")
    raw_vertices = doc.get("vertices")
    if isinstance(raw_vertices, bool) or raw_vertices is None:
        raise FormatError('missing or invalid "vertices"')
    if isinstance(raw_vertices, int):
        if raw_vertices < 0:
            raise FormatError("vertex count must be non-negative")
        vertices = range(raw_vertices)
    elif isinstance(raw_vertices, list) and all(
        isinstance(v, int) and not isinstance(v, bool) for v in raw_vertices
    ):
        vertices = raw_vertices
    else:
        raise FormatError('"vertices" must be a count or a list of ids')
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise FormatError('"edges" must be a list of pairs')
    edges = []
    for item in raw_edges:
        if not (isinstance(item, list) and len(item) == 2):
            raise FormatError(f"bad edge entry {item!r}")
        edges.append((item[0], item[1]))
    try:
        graph = Graph.build(vertices, edges)
    except MatchGadgetError as exc:
        raise FormatError(str(exc)) from exc
    marks = doc.get("marks")
    if marks is not None:
        if not isinstance(marks, dict) or set(marks) != {"l", "r", "c"}:
            raise FormatError('"marks" must map exactly l, r, c to vertex ids')
        marks = {k: int(v) for k, v in marks.items()}
        if any(v not in graph.vertices for v in marks.values()):
            raise FormatError("marks reference vertices outside the graph")
    return graph, marks


def coding_to_json(coding: CodingGraph) -> dict:
    return graph_to_json(
        coding.graph, {"l": coding.l, "r": coding.r, "c": coding.c}
    )


def coding_from_json(doc: dict) -> CodingGraph:
    graph, marks = graph_from_json(doc)
    if marks is None:
        raise FormatError("coding graph document needs marks")
    coding = CodingGraph(graph, marks["l"], marks["r"], marks["c"])
    validate_coding(coding)
    return coding


def matching_to_json(matching: Matching) -> dict:
    return {"edges": [list(e) for e in matching.sorted_edges()]}


def matching_from_json(doc: dict) -> Matching:
    if not isinstance(doc, dict) or not isinstance(doc.get("edges"), list):
        raise FormatError('matching document must be {"edges": [[u, v], ...]}')
    try:
        return Matching.build((e[0], e[1]) for e in doc["edges"])
    except (MatchGadgetError, ValueError, TypeError, IndexError) as exc:
        raise FormatError(f"bad matching edges: {exc}") from exc


_PALETTE = (
    "lightblue", "lightyellow", "lightpink", "lightcyan",
    "lavender", "mistyrose", "honeydew", "thistle",
)


def to_dot(
    graph: Graph,
    marks: dict[str, int] | None = None,
    groups: dict[int, str] | None = None,
    name: str = "g",
) -> str:
    """Undirected DOT document; marks get distinct shapes, groups get shades."""
    mark_shape = {"l": "square", "r": "square", "c": "diamond"}
    by_vertex = {v: k for k, v in (marks or {}).items()}
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in graph.sorted_vertices():
        attrs = []
        mark = by_vertex.get(v)
        if mark is not None:
            attrs.append(f'shape={mark_shape[mark]}')
            attrs.append(f'label="{mark}"')
        else:
            group = (groups or {}).get(v)
            if group is not None:
                top = group.split(".", 1)[0]
                color = _PALETTE[sum(map(ord, top)) % len(_PALETTE)]
                attrs.append("style=filled")
                attrs.append(f"fillcolor={color}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for u, v in graph.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coding_to_dot(coding: CodingGraph, name: str = "coding") -> str:
    return to_dot(
        coding.graph,
        {"l": coding.l, "r": coding.r, "c": coding.c},
        coding.groups,
        name,
    )
