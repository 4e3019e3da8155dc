"""The order on structures constraining how a shallow rule changes relations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from bvkit.exceptions import EqualStructuresError, OccMismatchError
from bvkit.structure import Leaf, Structure, leaves
from bvkit.web import Relation, match_by_label, web_of

__all__ = ["PrecViolation", "prec_violations", "prec_order", "allowed"]


_ALLOWED = {
    Relation.PAR: frozenset({Relation.PAR}),
    Relation.COPAR: frozenset(Relation),
    Relation.SEQ: frozenset({Relation.SEQ, Relation.PAR}),
    Relation.COSEQ: frozenset({Relation.COSEQ, Relation.PAR}),
}


def allowed(stronger: Relation) -> frozenset[Relation]:
    """Relations the weaker structure may have where the stronger has *stronger*."""
    return _ALLOWED[stronger]


@dataclass(frozen=True)
class PrecViolation:
    """A pair related by `weaker` in the smaller structure and `stronger` in the larger."""

    left: Leaf
    right: Leaf
    weaker: Relation
    stronger: Relation

    def __str__(self) -> str:
        return (
            f"{self.left} {self.weaker.symbol} {self.right} is not allowed "
            f"where the other side has {self.left} {self.stronger.symbol} {self.right}"
        )


def _check_occurrences(r: Structure, t: Structure) -> None:
    left, right = leaves(r), leaves(t)
    if Counter(left) != Counter(right):
        raise OccMismatchError(f"{r} and {t} do not have the same occurrences")
    if len(set(left)) != len(left):
        raise OccMismatchError(f"occurrences of {r} are not pairwise distinct")
    if r == t:
        raise EqualStructuresError(f"{r} is compared with itself")


def prec_violations(r: Structure, t: Structure) -> list[PrecViolation]:
    """Pairs breaking ``r ≺ t``.

    Par in *t* must stay par in *r*, seq in *t* must stay seq in the same
    direction or become par, and copar in *t* allows any relation.

    Raises
    ------
    OccMismatchError
        If *r* and *t* do not have the same distinct occurrence labels.
    EqualStructuresError
        If *r* equals *t*.
    """
    _check_occurrences(r, t)
    web_r, web_t = web_of(r), web_of(t)
    matching = match_by_label(web_r, web_t)
    found: list[PrecViolation] = []
    for i, j, weaker in web_r.pairs():
        stronger = web_t.relation(matching[i], matching[j])
        if weaker not in _ALLOWED[stronger]:
            found.append(PrecViolation(web_r.labels[i], web_r.labels[j], weaker, stronger))
    return found


def prec_order(r: Structure, t: Structure) -> bool:
    """Whether ``r ≺ t``; see `prec_violations`."""
    return not prec_violations(r, t)
