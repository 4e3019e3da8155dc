"""Relations inside deep substructures survive shallow rule instances."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from bvkit.exceptions import BadMatchingError
from bvkit.structure import OccurrenceTable, PositionedContext, Structure, positions
from bvkit.web import RelationChange, match_by_label, relation_diff, web_of

__all__ = ["DeepWitness", "check_deep_preservation"]


@dataclass(frozen=True)
class DeepWitness:
    """A substructure deeper than the rule whose relations changed."""

    position: PositionedContext
    change: RelationChange

    @property
    def substructure(self) -> Structure:
        return self.position.substructure

    @property
    def depth(self) -> int:
        return self.position.depth


def _members(table: OccurrenceTable, position: PositionedContext) -> list[int]:
    path, group = position.path, position.group
    size = len(path)
    return [
        item.index
        for item in table
        if item.path[:size] == path and (not group or (len(item.path) > size and item.path[size] in group))
    ]


def check_deep_preservation(
    conclusion: Structure,
    premise: Structure,
    n: int,
    matching: Mapping[int, int] | None = None,
) -> DeepWitness | None:
    """Look for a substructure at depth above *n* whose relations changed.

    Parameters
    ----------
    conclusion, premise : Structure
        Conclusion and premise of a rule instance.
    n : int
        Depth of the rule.
    matching : Mapping[int, int] | None
        Bijection from the occurrences of `conclusion` to those of
        `premise`; by default occurrences are matched by label.

    Returns
    -------
    DeepWitness | None
        `None` when every such substructure keeps its relations.

    Raises
    ------
    BadMatchingError
        If `matching` is not a bijection between all occurrences.
    """
    web_c, web_p = web_of(conclusion), web_of(premise)
    if matching is None:
        matching = match_by_label(web_c, web_p)
    if sorted(matching) != list(range(len(web_c))) or sorted(matching.values()) != list(range(len(web_p))):
        raise BadMatchingError("matching must pair every occurrence of both structures")
    table = web_c.occurrences
    for position in positions(conclusion):
        if position.depth <= n:
            continue
        members = _members(table, position)
        if len(members) < 2:
            continue
        changes = relation_diff(web_c, web_p, {i: matching[i] for i in members})
        if changes:
            return DeepWitness(position, changes[0])
    return None
