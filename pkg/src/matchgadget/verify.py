"""Independent verification layer: uniqueness counts, decoding, roundtrips.

Everything here re-derives its answers from first principles (perfect
matching search and plain boolean evaluation) so it can sit on the other
side of a disagreement from the compiler.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, MalformedCodingGraphError
from .formula import Formula, eval_formula
from .gadgets import (
    CodingGraph,
    HaltingOracle,
    SetCoding,
    compile_false,
    compile_formula,
    compile_true,
)
from .graph import Graph, Matching
from .matching import perfect_matchings_up_to

#: A second perfect matching is already a failure; counting past this many
#: needs an explicit request.
DEFAULT_UNIQUENESS_CAP = 10


@dataclass(frozen=True)
class UniquePmReport:
    """Exact perfect-matching count plus the matching when it is unique."""

    count: int
    matching: Matching | None

    def to_json(self) -> dict:
        out: dict = {"pm_count": self.count}
        if self.matching is not None:
            out["matching"] = [list(e) for e in self.matching.sorted_edges()]
        return out


def verify_unique_pm(graph: Graph, cap: int = DEFAULT_UNIQUENESS_CAP) -> UniquePmReport:
    """Count perfect matchings exactly, up to ``cap``.

    Raises CapExceededError when the graph has more than ``cap`` perfect
    matchings, since the exact count is then unknown.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    found = perfect_matchings_up_to(graph, cap + 1)
    if len(found) > cap:
        raise CapExceededError(f"graph has more than {cap} perfect matchings")
    return UniquePmReport(len(found), found[0] if len(found) == 1 else None)


def decode_truth(coding: CodingGraph, matching: Matching) -> bool:
    """Read the coded truth value off the unique perfect matching.

    True when l is matched into the interior, false when r is; anything
    else means the graph or matching is malformed.
    """
    interior = coding.interior
    l_partner = matching.partner.get(coding.l)
    r_partner = matching.partner.get(coding.r)
    l_inside = l_partner is not None and l_partner in interior
    r_inside = r_partner is not None and r_partner in interior
    if l_inside == r_inside:
        raise MalformedCodingGraphError(
            "expected exactly one of l, r to match into the interior"
        )
    return l_inside


def decode_set(set_coding: SetCoding, cap: int = DEFAULT_UNIQUENESS_CAP) -> frozenset[int]:
    """Indices a set-coding graph codes as members, via its unique perfect matching."""
    report = verify_unique_pm(set_coding.graph, cap)
    if report.matching is None:
        raise MalformedCodingGraphError(
            f"set coding has {report.count} perfect matchings, expected 1"
        )
    return set_coding.decode_with(report.matching)


@dataclass(frozen=True)
class RoundtripReport:
    """Compile, verify uniqueness, decode, and compare with direct evaluation."""

    pm_count: int
    decoded: bool | None
    expected: bool
    agree: bool

    def to_json(self) -> dict:
        return {
            "pm_count": self.pm_count,
            "decoded": self.decoded,
            "eval": self.expected,
            "agree": self.agree,
        }


def roundtrip_check(
    formula: Formula,
    env: list[bool],
    cap: int = DEFAULT_UNIQUENESS_CAP,
) -> RoundtripReport:
    """End-to-end soundness check for one formula and environment.

    Atoms are realized as constant true/false gadgets per ``env``; the
    compiled graph must have exactly one perfect matching decoding the same
    value direct evaluation gives.
    """
    gadgets = [compile_true() if b else compile_false() for b in env]
    coding = compile_formula(formula, gadgets)
    report = verify_unique_pm(coding.graph, cap)
    decoded = None
    if report.matching is not None:
        decoded = decode_truth(coding, report.matching)
    expected = eval_formula(formula, env)
    return RoundtripReport(
        report.count, decoded, expected, report.count == 1 and decoded == expected
    )


def evaluate_jump_query(
    context_bits: list[bool], program: int, oracle: HaltingOracle, step_bound: int
) -> bool:
    """Direct boolean evaluation of the bounded jump query.

    Mirrors the coded statement without touching formulas or graphs: some
    step below the bound makes every prefix-implication hold, where the
    implication for a prefix is vacuous unless the prefix equals the
    context bits.
    """
    n = len(context_bits)
    prefixes = ["".join("1" if (i >> (n - 1 - j)) & 1 else "0" for j in range(n))
                for i in range(2 ** n)]
    actual = "".join("1" if b else "0" for b in context_bits)
    for step in range(step_bound):
        if all(prefix != actual or oracle(program, prefix, step) for prefix in prefixes):
            return True
    return False
