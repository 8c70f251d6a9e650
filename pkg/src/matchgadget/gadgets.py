"""Compile boolean structure into graphs with unique perfect matchings.

A coding graph is a connected graph with three boundary marks l, r, c;
its unique perfect matching encodes a truth value by whether l or r is
matched into the interior.  Compositions below realize negation, the
asymmetric conjunction (not-left and right), derived connectives, finite
existentials, set coding, and step-bounded halting-oracle jump queries.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from .errors import (
    ContextTooLargeError,
    EmptyListError,
    EvenLengthError,
    MalformedCodingGraphError,
    UnboundAtomError,
)
from .formula import (
    And,
    AndNot,
    Atom,
    Exists,
    Formula,
    Implies,
    Not,
    Or,
    TrueLit,
    conjoin_all,
    false_literal,
)
from .graph import Edge, Graph, VertexRegistry, make_graph

#: Oracle contexts wider than this are refused (2**n antecedent blowup).
MAX_CONTEXT = 12


@dataclass
class CodingGraph:
    """Marked graph whose unique perfect matching encodes a truth value.

    ``groups`` records, for vertices inherited from sub-gadgets, the dotted
    path of the sub-gadget they came from; it only feeds DOT shading.
    """

    graph: Graph
    l: int
    r: int
    c: int
    groups: dict[int, str] = field(default_factory=dict, compare=False, repr=False)

    @property
    def interior(self) -> frozenset[int]:
        return self.graph.vertices - {self.l, self.r, self.c}

    def interior_neighbor(self, mark: int) -> int:
        """The unique interior vertex adjacent to ``mark``."""
        interior = self.interior
        found = [w for w in self.graph.adjacency[mark] if w in interior]
        if len(found) != 1:
            raise MalformedCodingGraphError(
                f"mark {mark} has {len(found)} interior neighbors, expected 1"
            )
        return found[0]

    def path_bound(self) -> int:
        """Edge-count bound no simple path in the graph can exceed."""
        return max(len(self.graph) - 1, 0)


def validate_coding(coding: CodingGraph) -> None:
    """Raise MalformedCodingGraphError unless the coding-graph shape holds."""
    g = coding.graph
    marks = (coding.l, coding.r, coding.c)
    if len(set(marks)) != 3 or any(m not in g.vertices for m in marks):
        raise MalformedCodingGraphError("marks l, r, c must be three distinct vertices")
    if set(g.adjacency[coding.c]) != {coding.l, coding.r}:
        raise MalformedCodingGraphError("c must be adjacent to exactly l and r")
    coding.interior_neighbor(coding.l)
    coding.interior_neighbor(coding.r)
    seen = {coding.l}
    frontier = [coding.l]
    while frontier:
        v = frontier.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    if seen != g.vertices:
        raise MalformedCodingGraphError("coding graph must be connected")


def _embed(
    registry: VertexRegistry,
    child: CodingGraph,
    drop: frozenset[int],
    tag: str,
    groups: dict[int, str],
    edges: list[Edge],
) -> dict[int, int]:
    """Copy a child gadget into a composition under fresh ids.

    Vertices in ``drop`` (removed marks) and their edges are skipped.
    Children are embedded before any new vertex is allocated, so ids come
    out in post-order.
    """
    mapping: dict[int, int] = {}
    for v in child.graph.sorted_vertices():
        if v in drop:
            continue
        fresh = registry.id((tag, v))
        mapping[v] = fresh
        sub = child.groups.get(v)
        groups[fresh] = tag if sub is None else f"{tag}.{sub}"
    for u, v in child.graph.sorted_edges():
        if u in drop or v in drop:
            continue
        edges.append((mapping[u], mapping[v]))
    return mapping


def compile_true() -> CodingGraph:
    """Six-vertex gadget with a single perfect matching that decodes true.

    The cycle l-x-y-r-c-l plus the pendant edge y-z forces the matching
    {x l, r c, y z}, which matches l into the interior.
    """
    registry = VertexRegistry()
    l, r, c, x, y, z = (registry.id(name) for name in ("l", "r", "c", "x", "y", "z"))
    graph = Graph.build(
        range(6), [(l, x), (x, y), (y, r), (r, c), (c, l), (y, z)]
    )
    coding = CodingGraph(graph, l, r, c)
    validate_coding(coding)
    return coding


def compile_false() -> CodingGraph:
    return compile_not(compile_true())


def compile_not(child: CodingGraph) -> CodingGraph:
    """Wrap a gadget so the composite decodes the negation.

    The child's center is removed; fresh marks l', r', c attach by the
    edges l-l', r-r', c-l', c-r'.  Whichever of l/r the child matched
    inward frees the opposite fresh mark to match inward here.
    """
    validate_coding(child)
    registry = VertexRegistry()
    groups: dict[int, str] = {}
    edges: list[Edge] = []
    mapping = _embed(registry, child, frozenset({child.c}), "0", groups, edges)
    new_l = registry.id(("new", "l"))
    new_r = registry.id(("new", "r"))
    new_c = registry.id(("new", "c"))
    edges += [
        (mapping[child.l], new_l),
        (mapping[child.r], new_r),
        (new_c, new_l),
        (new_c, new_r),
    ]
    coding = CodingGraph(
        Graph.build(range(len(registry)), edges), new_l, new_r, new_c, groups
    )
    validate_coding(coding)
    return coding


def compile_andnot(first: CodingGraph, second: CodingGraph) -> CodingGraph:
    """Composite decoding (not P1) and P2.

    Both centers are removed and the boundary cycle
    l1-l2-r1-r2-rr-r-c-l-l1 is added with fresh vertices rr, l, r, c.
    """
    validate_coding(first)
    validate_coding(second)
    registry = VertexRegistry()
    groups: dict[int, str] = {}
    edges: list[Edge] = []
    m1 = _embed(registry, first, frozenset({first.c}), "0", groups, edges)
    m2 = _embed(registry, second, frozenset({second.c}), "1", groups, edges)
    rr = registry.id(("new", "rr"))
    l = registry.id(("new", "l"))
    r = registry.id(("new", "r"))
    c = registry.id(("new", "c"))
    l1, r1 = m1[first.l], m1[first.r]
    l2, r2 = m2[second.l], m2[second.r]
    edges += [
        (l1, l2),
        (l2, r1),
        (r1, r2),
        (r2, rr),
        (rr, r),
        (r, c),
        (c, l),
        (l, l1),
    ]
    coding = CodingGraph(Graph.build(range(len(registry)), edges), l, r, c, groups)
    validate_coding(coding)
    return coding


def compile_connective(op: str, first: CodingGraph, second: CodingGraph) -> CodingGraph:
    """AND, OR, or IMPLIES, composed from negation and the asymmetric conjunction."""
    if op == "and":
        return compile_andnot(compile_not(first), second)
    if op == "or":
        return compile_not(compile_andnot(first, compile_not(second)))
    if op == "implies":
        return compile_not(compile_andnot(compile_not(first), compile_not(second)))
    raise ValueError(f"unknown connective {op!r}")


@dataclass(frozen=True)
class ExistsLayout:
    """Internal wiring of an existential gadget, for routing inspection."""

    x: int
    y: int
    z: int
    branch_vertices: tuple[frozenset[int], ...]


def _exists_with_layout(
    branches: Sequence[CodingGraph],
) -> tuple[CodingGraph, ExistsLayout]:
    if not branches:
        raise EmptyListError("existential gadget needs at least one branch")
    for b in branches:
        validate_coding(b)
    # Prefix transform: branch i is rebuilt to assert P(i) and the negation
    # of every earlier branch, so at most one transformed branch holds and a
    # witness routes through the least possible index.
    hats: list[CodingGraph] = []
    for i, branch in enumerate(branches):
        acc = branch
        for j in range(i - 1, -1, -1):
            acc = compile_connective("and", acc, compile_not(branches[j]))
        hats.append(acc)
    registry = VertexRegistry()
    groups: dict[int, str] = {}
    edges: list[Edge] = []
    mappings: list[dict[int, int]] = []
    freed: list[int] = []
    for i, hat in enumerate(hats):
        freed.append(hat.interior_neighbor(hat.l))
        mappings.append(
            _embed(registry, hat, frozenset({hat.l, hat.c}), str(i), groups, edges)
        )
    x = registry.id(("new", "x"))
    y = registry.id(("new", "y"))
    z = registry.id(("new", "z"))
    l = registry.id(("new", "l"))
    c = registry.id(("new", "c"))
    r = registry.id(("new", "r"))
    for i, hat in enumerate(hats):
        edges.append((y, mappings[i][freed[i]]))
        edges.append((z, mappings[i][hat.r]))
    edges += [(y, x), (x, l), (l, c), (c, r), (r, z)]
    coding = CodingGraph(Graph.build(range(len(registry)), edges), l, r, c, groups)
    validate_coding(coding)
    layout = ExistsLayout(
        x, y, z, tuple(frozenset(m.values()) for m in mappings)
    )
    return coding, layout


def compile_exists(branches: Sequence[CodingGraph]) -> CodingGraph:
    """Composite decoding the disjunction of the branches.

    Each transformed branch loses its l and c marks; the freed interior
    neighbors share the new vertex y, the branch r marks share z, and the
    path y-x-l-c-r-z closes the boundary.
    """
    coding, _ = _exists_with_layout(branches)
    return coding


@dataclass
class SetCoding:
    """Disjoint union of coding graphs, read as the set of true indices."""

    graph: Graph
    components: tuple[CodingGraph, ...]

    def decode_with(self, matching) -> frozenset[int]:
        """Indices whose component l is matched into that component's interior."""
        out = []
        for i, comp in enumerate(self.components):
            partner = matching.partner.get(comp.l)
            if partner is not None and partner in comp.interior:
                out.append(i)
        return frozenset(out)


def compile_set(branches: Sequence[CodingGraph]) -> SetCoding:
    """Disjoint union; the unique perfect matching decodes every index at once."""
    for b in branches:
        validate_coding(b)
    registry = VertexRegistry()
    groups: dict[int, str] = {}
    edges: list[Edge] = []
    components: list[CodingGraph] = []
    for i, branch in enumerate(branches):
        mapping = _embed(registry, branch, frozenset(), str(i), groups, edges)
        components.append(
            CodingGraph(
                Graph.build(mapping.values(),
                            [(mapping[u], mapping[v]) for u, v in branch.graph.edges]),
                mapping[branch.l],
                mapping[branch.r],
                mapping[branch.c],
            )
        )
    graph = Graph.build(range(len(registry)), edges)
    return SetCoding(graph, tuple(components))


@dataclass(frozen=True)
class HaltingOracle:
    """Step-bounded halting predicate over programs and oracle prefixes.

    ``halts(program, prefix, steps)`` must be monotone in ``steps`` and may
    only depend on the bits of ``prefix`` (a string of 0s and 1s).
    """

    halts: Callable[[int, str, int], bool]

    def __call__(self, program: int, prefix: str, steps: int) -> bool:
        return bool(self.halts(program, prefix, steps))

    @staticmethod
    def from_table(triples: Sequence[Sequence]) -> "HaltingOracle":
        """Oracle from [program, prefix, min_steps] rows; monotone by construction."""
        table: dict[tuple[int, str], int] = {}
        for program, prefix, min_steps in triples:
            prefix = str(prefix)
            if set(prefix) - {"0", "1"}:
                raise ValueError(f"prefix {prefix!r} is not a bit string")
            key = (int(program), prefix)
            steps = int(min_steps)
            if key not in table or steps < table[key]:
                table[key] = steps

        def halts(program: int, prefix: str, steps: int) -> bool:
            best = table.get((program, prefix))
            return best is not None and best <= steps

        return HaltingOracle(halts)


def jump_query_formula(
    context_size: int, program: int, oracle: HaltingOracle, step_bound: int
) -> Formula:
    """Formula asserting the program halts within some step below the bound.

    For each step, a conjunction over every possible oracle prefix says:
    if the context matches this prefix then the oracle reports halting.
    Oracle outcomes become constant TRUE / NOT TRUE leaves at build time.
    """
    arms: list[Formula] = []
    for step in range(step_bound):
        implications: list[Formula] = []
        for bits in itertools.product((0, 1), repeat=context_size):
            literals: list[Formula] = [
                Atom(j) if b else Not(Atom(j)) for j, b in enumerate(bits)
            ]
            prefix = "".join(str(b) for b in bits)
            leaf: Formula = (
                TrueLit() if oracle(program, prefix, step) else false_literal()
            )
            implications.append(Implies(conjoin_all(literals), leaf))
        arms.append(conjoin_all(implications))
    return Exists(tuple(arms))


def compile_jump_query(
    context: Sequence[CodingGraph],
    program: int,
    oracle: HaltingOracle,
    step_bound: int,
) -> CodingGraph:
    """Gadget deciding step-bounded jump membership against a coded context.

    The context graphs code bit membership; the compiled gadget decodes
    true exactly when the halting formula over all prefixes does.
    """
    if len(context) > MAX_CONTEXT:
        raise ContextTooLargeError(
            f"context of {len(context)} bits exceeds the limit of {MAX_CONTEXT}"
        )
    if step_bound < 1:
        raise ValueError("step bound must be at least 1")
    ast = jump_query_formula(len(context), program, oracle, step_bound)
    return compile_formula(ast, list(context))


def jump_hierarchy(
    start_bits: Sequence[bool],
    levels: int,
    oracle: HaltingOracle,
    width: int,
    step_bound: int,
) -> list[SetCoding]:
    """Finite-iteration jump tower: level j+1 queries level j per program id.

    Level 0 codes the start bits directly; each later level codes
    {program < width : bounded jump query against the previous level}.
    """
    if width > MAX_CONTEXT or len(start_bits) > MAX_CONTEXT:
        raise ContextTooLargeError(f"width above {MAX_CONTEXT} is not supported")
    current = [compile_true() if b else compile_false() for b in start_bits]
    out = [compile_set(current)]
    for _ in range(levels):
        current = [
            compile_jump_query(current, program, oracle, step_bound)
            for program in range(width)
        ]
        out.append(compile_set(current))
    return out


@dataclass(frozen=True)
class SeparationPath:
    """Odd-length path with its center edge singled out."""

    graph: Graph
    center: Edge


def separation_path(length: int) -> SeparationPath:
    """Path with the given odd edge count; its unique perfect matching
    contains the center edge exactly when length is 1 mod 4."""
    if length < 1 or length % 2 == 0:
        raise EvenLengthError(f"length must be a positive odd number, got {length}")
    graph = make_graph(length + 1, [(i, i + 1) for i in range(length)])
    half = (length - 1) // 2
    return SeparationPath(graph, (half, half + 1))


def range_flag_edge(n: int) -> Edge:
    return (4 * n, 4 * n + 2)


def range_gadget(n: int, in_range: bool) -> Graph:
    """Membership gadget: the flag edge {4n, 4n+2} leaves the unique perfect
    matching exactly when the index is in range.

    Out of range the gadget is the bare flag edge; in range it grows to the
    3-edge path j-4n-(4n+2)-k on the flanking odd ids.
    """
    lo, hi = range_flag_edge(n)
    if not in_range:
        return Graph.build([lo, hi], [(lo, hi)])
    j, k = lo + 1, hi + 1
    return Graph.build([j, lo, hi, k], [(j, lo), (lo, hi), (hi, k)])


def compile_formula(formula: Formula, env: Sequence[CodingGraph]) -> CodingGraph:
    """Structural recursion dispatching each node to its gadget builder."""
    if isinstance(formula, TrueLit):
        return compile_true()
    if isinstance(formula, Atom):
        if not 0 <= formula.index < len(env):
            raise UnboundAtomError(f"atom {formula.index} has no binding")
        return env[formula.index]
    if isinstance(formula, Not):
        return compile_not(compile_formula(formula.operand, env))
    if isinstance(formula, And):
        return compile_connective(
            "and", compile_formula(formula.left, env), compile_formula(formula.right, env)
        )
    if isinstance(formula, Or):
        return compile_connective(
            "or", compile_formula(formula.left, env), compile_formula(formula.right, env)
        )
    if isinstance(formula, Implies):
        return compile_connective(
            "implies",
            compile_formula(formula.left, env),
            compile_formula(formula.right, env),
        )
    if isinstance(formula, AndNot):
        return compile_andnot(
            compile_formula(formula.left, env), compile_formula(formula.right, env)
        )
    if isinstance(formula, Exists):
        return compile_exists([compile_formula(b, env) for b in formula.branches])
    raise TypeError(f"not a formula node: {formula!r}")
