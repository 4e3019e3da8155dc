"""Comparing the relations of two webs through an occurrence matching."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import combinations

from bvkit.exceptions import BadMatchingError, DuplicateAtomsError
from bvkit.web._relations import Relation, WebCandidate

__all__ = ["RelationChange", "relation_diff", "match_by_label", "same_web"]


@dataclass(frozen=True)
class RelationChange:
    """Occurrences ``pair`` of the first web relate by `before`, their images by `after`."""

    pair: tuple[int, int]
    before: Relation
    after: Relation


def relation_diff(
    first: WebCandidate, second: WebCandidate, matching: Mapping[int, int]
) -> list[RelationChange]:
    """List the pairs whose relation is not preserved by *matching*.

    Parameters
    ----------
    first : WebCandidate
        Web whose occurrences are the keys of `matching`.
    second : WebCandidate
        Web whose occurrences are the values of `matching`.
    matching : Mapping[int, int]
        Injective map between the occurrences the two webs share.

    Returns
    -------
    list[RelationChange]
        Changed pairs ``(i, j)`` with ``i < j`` in `first`; empty iff every
        relation is preserved.

    Raises
    ------
    BadMatchingError
        If `matching` is not injective or leaves the occurrence range.
    """
    for source, target in matching.items():
        if not 0 <= source < len(first) or not 0 <= target < len(second):
            raise BadMatchingError(f"pair {source} -> {target} is out of range")
    if len(set(matching.values())) != len(matching):
        raise BadMatchingError("matching is not injective")
    changes: list[RelationChange] = []
    for i, j in combinations(sorted(matching), 2):
        before = first.relation(i, j)
        after = second.relation(matching[i], matching[j])
        if before is not after:
            changes.append(RelationChange((i, j), before, after))
    return changes


def match_by_label(first: WebCandidate, second: WebCandidate) -> dict[int, int]:
    """Match the occurrences of two webs sharing their labels.

    Labels missing from one side are left out of the matching.

    Raises
    ------
    DuplicateAtomsError
        If a label repeats in either web.
    """
    for web in (first, second):
        if len(set(web.labels)) != len(web.labels):
            raise DuplicateAtomsError("label matching needs pairwise distinct labels")
    where = {label: j for j, label in enumerate(second.labels)}
    return {i: where[label] for i, label in enumerate(first.labels) if label in where}


def same_web(first: WebCandidate, second: WebCandidate) -> bool:
    """Whether two webs over the same distinct labels have the same relations."""
    if sorted(map(str, first.labels)) != sorted(map(str, second.labels)):
        return False
    return not relation_diff(first, second, match_by_label(first, second))
