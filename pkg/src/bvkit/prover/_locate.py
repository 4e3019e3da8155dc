"""Placing a rule instance inside the structure it rewrites."""

from __future__ import annotations

from collections.abc import Iterator

from bvkit.exceptions import InstanceError
from bvkit.structure import (
    UNIT,
    Kind,
    Path,
    PositionedContext,
    Structure,
    make,
    replace_at,
)
from bvkit.prover._rules import RuleInstance, RuleName

__all__ = ["groupings_of", "unit_insertions", "locate_step"]


def _nodes(s: Structure, path: Path = ()) -> Iterator[tuple[Path, Structure]]:
    yield path, s
    for i, child in enumerate(s.children):
        yield from _nodes(child, (*path, i))


def _match_multiset(children: tuple[Structure, ...], parts: tuple[Structure, ...]) -> Iterator[tuple[int, ...]]:
    def walk(k: int, used: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if k == len(parts):
            yield tuple(sorted(used))
            return
        for i, child in enumerate(children):
            if i not in used and child == parts[k]:
                yield from walk(k + 1, (*used, i))

    seen: set[tuple[int, ...]] = set()
    for group in walk(0, ()):
        if group not in seen:
            seen.add(group)
            yield group


def groupings_of(node: Structure, redex: Structure) -> Iterator[tuple[int, ...]]:
    """Child groups of *node* that make up *redex*; ``()`` for the node itself."""
    if node == redex:
        yield ()
    if node.kind not in (Kind.PAR, Kind.COPAR, Kind.SEQ):
        return
    parts = redex.children if redex.kind is node.kind else (redex,)
    children = node.children
    if not parts or len(parts) >= len(children):
        return
    if node.kind is Kind.SEQ:
        for start in range(len(children) - len(parts) + 1):
            if children[start : start + len(parts)] == parts:
                yield tuple(range(start, start + len(parts)))
    else:
        yield from _match_multiset(children, parts)


def unit_insertions(node: Structure, filler: Structure) -> Iterator[Structure]:
    """Structures obtained by putting *filler* next to *node* with one connective."""
    yield make(Kind.PAR, (node, filler))
    yield make(Kind.COPAR, (node, filler))
    yield make(Kind.SEQ, (node, filler))
    yield make(Kind.SEQ, (filler, node))


def locate_step(
    rule: RuleName,
    conclusion: Structure,
    redex: Structure,
    contractum: Structure,
    premise: Structure,
    *,
    trivial: bool = False,
) -> RuleInstance:
    """Find where *redex* sits in *conclusion* so that the step yields *premise*.

    For ai↑ the redex is the unit: the instance is placed at the node next
    to which the contractum is inserted.

    Raises
    ------
    InstanceError
        If no position of *conclusion* yields *premise*.
    """
    if rule is RuleName.AXIOM:
        if conclusion != UNIT or premise != UNIT:
            raise InstanceError("the axiom only proves the unit")
        return RuleInstance(rule, PositionedContext(UNIT), UNIT, UNIT)
    if rule is RuleName.AI_UP and redex == UNIT:
        for path, node in _nodes(conclusion):
            if any(replace_at(conclusion, path, c) == premise for c in unit_insertions(node, contractum)):
                return RuleInstance(rule, PositionedContext(conclusion, path), UNIT, contractum, trivial=trivial)
        raise InstanceError(f"{premise} is not {conclusion} with {contractum} inserted")
    for path, node in _nodes(conclusion):
        for group in groupings_of(node, redex):
            context = PositionedContext(conclusion, path, group)
            if context.plug(contractum) == premise:
                return RuleInstance(rule, context, redex, contractum, trivial=trivial)
    raise InstanceError(f"{redex} -> {contractum} does not rewrite {conclusion} into {premise}")
