"""Boolean formula AST with standard semantics.

There is no FALSE node; the false literal is represented as NOT(TRUE),
matching how the graph compiler realizes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import UnboundAtomError


@dataclass(frozen=True)
class TrueLit:
    pass


@dataclass(frozen=True)
class Atom:
    index: int


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class AndNot:
    """Holds when ``left`` is false and ``right`` is true."""

    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    branches: tuple["Formula", ...]

    def __post_init__(self):
        if not self.branches:
            raise ValueError("existential needs at least one branch")


Formula = Union[TrueLit, Atom, Not, And, Or, Implies, AndNot, Exists]


def false_literal() -> Formula:
    return Not(TrueLit())


def eval_formula(formula: Formula, env: list[bool]) -> bool:
    """Standard boolean semantics; EXISTS is the disjunction of its branches."""
    if isinstance(formula, TrueLit):
        return True
    if isinstance(formula, Atom):
        if not 0 <= formula.index < len(env):
            raise UnboundAtomError(f"atom {formula.index} has no binding")
        return env[formula.index]
    if isinstance(formula, Not):
        return not eval_formula(formula.operand, env)
    if isinstance(formula, And):
        return eval_formula(formula.left, env) and eval_formula(formula.right, env)
    if isinstance(formula, Or):
        return eval_formula(formula.left, env) or eval_formula(formula.right, env)
    if isinstance(formula, Implies):
        return (not eval_formula(formula.left, env)) or eval_formula(formula.right, env)
    if isinstance(formula, AndNot):
        return (not eval_formula(formula.left, env)) and eval_formula(formula.right, env)
    if isinstance(formula, Exists):
        return any(eval_formula(b, env) for b in formula.branches)
    raise TypeError(f"not a formula node: {formula!r}")


def conjoin_all(formulas: list[Formula]) -> Formula:
    """Balanced conjunction of a list; the empty conjunction is TRUE."""
    if not formulas:
        return TrueLit()
    layer = list(formulas)
    while len(layer) > 1:
        nxt = [
            And(layer[i], layer[i + 1]) if i + 1 < len(layer) else layer[i]
            for i in range(0, len(layer), 2)
        ]
        layer = nxt
    return layer[0]


def format_formula(formula: Formula) -> str:
    """Render a formula in the surface DSL.

    AndNot has no dedicated surface form; it renders as the equivalent
    ``(!left & right)``, so reparsing yields a semantically equal formula.
    """
    if isinstance(formula, TrueLit):
        return "T"
    if isinstance(formula, Atom):
        return f"@{formula.index}"
    if isinstance(formula, Not):
        if isinstance(formula.operand, TrueLit):
            return "F"
        return "!" + format_formula(formula.operand)
    if isinstance(formula, And):
        return f"({format_formula(formula.left)}&{format_formula(formula.right)})"
    if isinstance(formula, Or):
        return f"({format_formula(formula.left)}|{format_formula(formula.right)})"
    if isinstance(formula, Implies):
        return f"({format_formula(formula.left)}->{format_formula(formula.right)})"
    if isinstance(formula, AndNot):
        return f"(!{format_formula(formula.left)}&{format_formula(formula.right)})"
    if isinstance(formula, Exists):
        return "E[" + ",".join(format_formula(b) for b in formula.branches) + "]"
    raise TypeError(f"not a formula node: {formula!r}")
