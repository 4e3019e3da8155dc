"""Which first proof steps of a goal lead to a proof."""

from __future__ import annotations

from dataclasses import dataclass

from bvkit.structure import Structure
from bvkit.prover._rules import RuleInstance, expand
from bvkit.prover._search import DEFAULT_BUDGET, ProofSearch

__all__ = ["FirstRedex", "first_redex_analysis", "min_provable_depth"]


@dataclass(frozen=True)
class FirstRedex:
    instance: RuleInstance
    redex_depth: int
    premise_provable: bool

    @property
    def premise(self) -> Structure:
        return self.instance.premise


def first_redex_analysis(
    goal: Structure,
    budget: int = DEFAULT_BUDGET,
    search: ProofSearch | None = None,
) -> list[FirstRedex]:
    """Decide, for each bottom-most rule instance of *goal*, whether its premise is provable.

    All premises are decided by one `ProofSearch`, so work shared between
    them is done once.

    Raises
    ------
    BudgetExceededError
        If deciding one premise explores more than *budget* structures.
    """
    search = search or ProofSearch(budget)
    entries = []
    for instance, premise in expand(goal):
        provable = search.is_provable(premise)
        search.logger.debug("%s at depth %d: %s", instance, instance.depth, provable)
        entries.append(FirstRedex(instance, instance.depth, provable))
    return entries


def min_provable_depth(entries: list[FirstRedex]) -> int | None:
    """Least redex depth among first steps with a provable premise."""
    return min((e.redex_depth for e in entries if e.premise_provable), default=None)
