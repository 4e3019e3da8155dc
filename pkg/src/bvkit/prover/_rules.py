"""Inference rules of BV and their one-step bottom-up expansion."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from bvkit.structure import (
    UNIT,
    AtomNode,
    Kind,
    Path,
    PositionedContext,
    Structure,
    make,
)

__all__ = ["RuleName", "BV_RULES", "SBV_RULES", "RuleInstance", "expand", "seq_splits"]


class RuleName(str, Enum):
    """Rules of system SBV; BV is the subset without the up-rules."""

    AXIOM = "axiom"
    AI_DOWN = "ai_down"
    SWITCH = "switch"
    Q_DOWN = "q_down"
    AI_UP = "ai_up"
    Q_UP = "q_up"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    RuleName.AXIOM: "o↓",
    RuleName.AI_DOWN: "ai↓",
    RuleName.SWITCH: "s",
    RuleName.Q_DOWN: "q↓",
    RuleName.AI_UP: "ai↑",
    RuleName.Q_UP: "q↑",
}

BV_RULES = frozenset({RuleName.AXIOM, RuleName.AI_DOWN, RuleName.SWITCH, RuleName.Q_DOWN})
SBV_RULES = frozenset(RuleName)


@dataclass(frozen=True)
class RuleInstance:
    """A rule applied in a context.

    The conclusion is ``context.root``, with `redex` filling the hole;
    the premise is ``context.plug(contractum)``.

    Attributes
    ----------
    rule : RuleName
        The applied rule.
    context : PositionedContext
        Position of the redex inside the conclusion.
    redex : Structure
        Rewritten substructure of the conclusion.
    contractum : Structure
        Substructure replacing it in the premise.
    witnesses : tuple[tuple[str, Structure], ...]
        Bindings of the rule's schematic structures, e.g. ``R``, ``T``.
    trivial : bool
        Marks an instance whose premise equals its conclusion.
    """

    rule: RuleName
    context: PositionedContext
    redex: Structure
    contractum: Structure
    witnesses: tuple[tuple[str, Structure], ...] = field(default=(), compare=False)
    trivial: bool = False

    @property
    def conclusion(self) -> Structure:
        return self.context.root

    @property
    def premise(self) -> Structure:
        if self.rule is RuleName.AXIOM:
            return UNIT
        return self.context.plug(self.contractum)

    @property
    def depth(self) -> int:
        """Depth of the context the redex sits in."""
        return self.context.depth

    def __str__(self) -> str:
        return f"{self.rule.symbol} {self.redex} -> {self.contractum} at {list(self.context.path)}"


def seq_splits(s: Structure) -> Iterator[tuple[Structure, Structure]]:
    """Every way of reading *s* as ``<R;R'>``, unit paddings included."""
    if s.kind is Kind.SEQ:
        children = s.children
        for cut in range(len(children) + 1):
            yield make(Kind.SEQ, children[:cut]), make(Kind.SEQ, children[cut:])
    else:
        yield UNIT, s
        yield s, UNIT


def _subsets(indices: list[int], *, empty: bool = False) -> Iterator[tuple[int, ...]]:
    for size in range(0 if empty else 1, len(indices) + 1):
        yield from combinations(indices, size)


def _par_nodes(s: Structure, path: Path = ()) -> Iterator[tuple[Path, Structure]]:
    if s.kind is Kind.PAR:
        yield path, s
    for i, child in enumerate(s.children):
        yield from _par_nodes(child, (*path, i))


def _ai_down(goal: Structure, path: Path, node: Structure) -> Iterator[RuleInstance]:
    children = node.children
    for i, j in combinations(range(len(children)), 2):
        left, right = children[i], children[j]
        if (
            isinstance(left, AtomNode)
            and isinstance(right, AtomNode)
            and left.atom.dual() == right.atom
        ):
            yield RuleInstance(
                RuleName.AI_DOWN,
                PositionedContext(goal, path, (i, j)),
                make(Kind.PAR, (left, right)),
                UNIT,
                (("a", left),),
            )


def _switch(goal: Structure, path: Path, node: Structure) -> Iterator[RuleInstance]:
    children = node.children
    for u, copar in enumerate(children):
        if copar.kind is not Kind.COPAR:
            continue
        parts = copar.children
        others = [k for k in range(len(children)) if k != u]
        for moved in _subsets(list(range(len(parts)))):
            r_prime = make(Kind.COPAR, [parts[k] for k in moved])
            r = make(Kind.COPAR, [p for k, p in enumerate(parts) if k not in moved])
            for chosen in _subsets(others):
                t = make(Kind.PAR, [children[k] for k in chosen])
                yield RuleInstance(
                    RuleName.SWITCH,
                    PositionedContext(goal, path, (u, *chosen)),
                    make(Kind.PAR, [copar, t]),
                    make(Kind.COPAR, [make(Kind.PAR, [r, t]), r_prime]),
                    (("R", r), ("R'", r_prime), ("T", t)),
                )


def _q_down(goal: Structure, path: Path, node: Structure) -> Iterator[RuleInstance]:
    children = node.children
    for i, j in combinations(range(len(children)), 2):
        u, v = children[i], children[j]
        redex = make(Kind.PAR, (u, v))
        context = PositionedContext(goal, path, (i, j))
        for r, r_prime in seq_splits(u):
            for t, t_prime in seq_splits(v):
                contractum = make(
                    Kind.SEQ,
                    (make(Kind.PAR, (r, t)), make(Kind.PAR, (r_prime, t_prime))),
                )
                if contractum == redex:
                    continue
                yield RuleInstance(
                    RuleName.Q_DOWN,
                    context,
                    redex,
                    contractum,
                    (("R", r), ("R'", r_prime), ("T", t), ("T'", t_prime)),
                )


def expand(goal: Structure) -> list[tuple[RuleInstance, Structure]]:
    """All BV rule instances with conclusion *goal*, one per distinct premise.

    Rules are applied bottom-up at every par node: ai↓ on an atom and its
    dual, switch moving part of a copar child next to other par children,
    and q↓ merging two par children through a seq split of each.

    Parameters
    ----------
    goal : Structure
        Canonical structure.

    Returns
    -------
    list[tuple[RuleInstance, Structure]]
        Instances paired with their premise, in discovery order.
    """
    seen: set[Structure] = set()
    result: list[tuple[RuleInstance, Structure]] = []
    for path, node in _par_nodes(goal):
        for generator in (_ai_down, _switch, _q_down):
            for instance in generator(goal, path, node):
                premise = instance.premise
                if premise == goal or premise in seen:
                    continue
                seen.add(premise)
                result.append((instance, premise))
    return result
