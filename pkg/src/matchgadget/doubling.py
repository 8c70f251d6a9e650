"""Doubling trees: the tree transform whose matchings mirror root paths.

Every non-root tree node becomes a bottom/top vertex pair joined by a
doubling edge; the bottom attaches to the parent's top (or the root).
Root paths then convert to near-perfect matchings and back.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import (
    NotAPathError,
    NotPrefixClosedError,
    RootUncoveredError,
    StuckError,
)
from .graph import Graph, Matching, VertexRegistry, canonical_edge

TreeNode = tuple[int, ...]


def validate_tree(nodes: Iterable[Sequence[int]]) -> frozenset[TreeNode]:
    """Normalize node addresses and check prefix closure (root included)."""
    tree = frozenset(tuple(n) for n in nodes)
    if () not in tree:
        raise NotPrefixClosedError("tree must contain the root address ()")
    for node in tree:
        if node and node[:-1] not in tree:
            raise NotPrefixClosedError(f"node {node} is missing its parent")
    return tree


@dataclass
class DoublingTreeGraph:
    """Graph form of a finite tree, with the node-to-vertex bookkeeping."""

    graph: Graph
    root: int
    pairs: dict[TreeNode, tuple[int, int]] = field(repr=False)
    vertex_role: dict[int, tuple[TreeNode, str]] = field(repr=False)

    @property
    def tree_nodes(self) -> frozenset[TreeNode]:
        return frozenset(self.pairs) | {()}

    def bottom(self, node: TreeNode) -> int:
        return self.pairs[node][0]

    def top(self, node: TreeNode) -> int:
        return self.pairs[node][1]

    def attach_point(self, node: TreeNode) -> int:
        """Vertex the bottom of ``node`` hangs from: parent's top or the root."""
        parent = node[:-1]
        return self.root if parent == () else self.pairs[parent][1]


def doubling_tree(nodes: Iterable[Sequence[int]]) -> DoublingTreeGraph:
    """Build the doubling-tree graph of a finite prefix-closed tree.

    The result has 2|T| - 1 vertices and 2(|T| - 1) edges, allocated in
    shortlex node order so ids are reproducible.
    """
    tree = validate_tree(nodes)
    order = sorted(tree, key=lambda t: (len(t), t))
    registry = VertexRegistry()
    root = registry.id("root")
    pairs: dict[TreeNode, tuple[int, int]] = {}
    vertex_role: dict[int, tuple[TreeNode, str]] = {root: ((), "root")}
    for node in order:
        if node == ():
            continue
        bottom = registry.id((node, "bottom"))
        top = registry.id((node, "top"))
        pairs[node] = (bottom, top)
        vertex_role[bottom] = (node, "bottom")
        vertex_role[top] = (node, "top")
    edges = []
    for node in order:
        if node == ():
            continue
        bottom, top = pairs[node]
        edges.append((bottom, top))
        parent = node[:-1]
        attach = root if parent == () else pairs[parent][1]
        edges.append(canonical_edge(attach, bottom))
    graph = Graph.build(range(len(registry)), edges)
    return DoublingTreeGraph(graph, root, pairs, vertex_role)


def _validate_root_path(
    dtree: DoublingTreeGraph, path: Sequence[Sequence[int]]
) -> tuple[TreeNode, ...]:
    nodes = tuple(tuple(n) for n in path)
    if not nodes or nodes[0] != ():
        raise NotAPathError("root path must start at the root address ()")
    for prev, node in zip(nodes, nodes[1:]):
        if node not in dtree.pairs:
            raise NotAPathError(f"node {node} is not in the tree")
        if node[:-1] != prev:
            raise NotAPathError(f"{node} is not a child of {prev}")
    return nodes


def doubling_path_to_matching(
    dtree: DoublingTreeGraph, path: Sequence[Sequence[int]]
) -> Matching:
    """Matching induced by a root path: transfer edges plus off-path doubling edges.

    Covers every vertex except the top half of the final path node (or the
    root itself for the empty path).
    """
    nodes = _validate_root_path(dtree, path)
    on_path = set(nodes)
    edges: list[tuple[int, int]] = []
    for node in nodes[1:]:
        edges.append(canonical_edge(dtree.attach_point(node), dtree.bottom(node)))
    for node, (bottom, top) in dtree.pairs.items():
        if node not in on_path:
            edges.append((bottom, top))
    return Matching.build(edges)


def doubling_matching_to_path(
    dtree: DoublingTreeGraph, matching: Matching
) -> tuple[TreeNode, ...]:
    """Trace the matching up the tree from the root, returning node addresses.

    The walk crosses one transfer edge and one doubling edge per level and
    stops at the first top vertex the matching leaves uncovered.
    """
    partner = matching.partner
    if dtree.root not in partner:
        raise RootUncoveredError("matching leaves the root unmatched")
    path: list[TreeNode] = [()]
    nxt = partner[dtree.root]
    while True:
        node, role = dtree.vertex_role.get(nxt, ((), ""))
        if role != "bottom" or node[:-1] != path[-1]:
            raise StuckError(
                f"vertex {nxt} is not the bottom of a child of {path[-1]}"
            )
        path.append(node)
        top = dtree.top(node)
        if top not in partner:
            return tuple(path)
        nxt = partner[top]
