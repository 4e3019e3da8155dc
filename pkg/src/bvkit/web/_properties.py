"""Characterization properties of relation webs."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations

from bvkit.web._relations import Relation, WebCandidate

__all__ = ["WebProperty", "Violation", "PropertyReport", "verify_web_properties", "check_inverse_square"]


class WebProperty(str, Enum):
    SEQ_TRANSITIVITY = "seq-transitivity"
    TRIANGULAR = "triangular"
    SQUARE_SEQ = "square-seq"
    SQUARE_PAR = "square-par"
    SQUARE_COPAR = "square-copar"
    INVERSE_SQUARE_PAR = "inverse-square-par"
    INVERSE_SQUARE_COPAR = "inverse-square-copar"


@dataclass(frozen=True)
class Violation:
    """A property that fails on the occurrences in `witness`."""

    property: WebProperty
    witness: tuple[int, ...]


@dataclass
class PropertyReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def _transitivity(web: WebCandidate, report: PropertyReport) -> None:
    for a, b, c in permutations(range(len(web)), 3):
        if (
            web.relation(a, b) is Relation.SEQ
            and web.relation(b, c) is Relation.SEQ
            and web.relation(a, c) is not Relation.SEQ
        ):
            report.violations.append(Violation(WebProperty.SEQ_TRANSITIVITY, (a, b, c)))


def _triangular(web: WebCandidate, report: PropertyReport) -> None:
    for a, b, c in combinations(range(len(web)), 3):
        families = {
            web.relation(a, b).family,
            web.relation(b, c).family,
            web.relation(c, a).family,
        }
        if len(families) == 3:
            report.violations.append(Violation(WebProperty.TRIANGULAR, (a, b, c)))


_SQUARES = (
    (Relation.SEQ, WebProperty.SQUARE_SEQ),
    (Relation.PAR, WebProperty.SQUARE_PAR),
    (Relation.COPAR, WebProperty.SQUARE_COPAR),
)


def _square(web: WebCandidate, report: PropertyReport) -> None:
    rel = web.relation
    for a, b, c, d in permutations(range(len(web)), 4):
        for kind, tag in _SQUARES:
            if not (rel(a, b) is kind and rel(a, d) is kind and rel(c, d) is kind):
                continue
            closing = [(a, c), (b, c), (b, d)]
            if kind is Relation.SEQ:
                closing += [(c, a), (c, b), (d, b)]
            if not any(rel(x, y) is kind for x, y in closing):
                report.violations.append(Violation(tag, (a, b, c, d)))


def verify_web_properties(web: WebCandidate) -> PropertyReport:
    """Check seq transitivity, the triangular and the three square properties.

    Irreflexivity, totality, uniqueness, seq inversion and symmetry hold
    for every `WebCandidate` by construction; the remaining properties
    are checked exhaustively over triples and quadruples of occurrences.
    """
    report = PropertyReport()
    _transitivity(web, report)
    _triangular(web, report)
    _square(web, report)
    return report


def check_inverse_square(web: WebCandidate) -> PropertyReport:
    """Check the inverse square property for par and copar.

    If ``a`` is not related to ``b``, ``d`` nor ``c`` to ``d``, while
    ``a`` is related to ``c`` and ``b`` to ``d``, then ``b`` is not related
    to ``c``; for both par and copar.
    """
    report = PropertyReport()
    rel = web.relation
    tags = ((Relation.PAR, WebProperty.INVERSE_SQUARE_PAR), (Relation.COPAR, WebProperty.INVERSE_SQUARE_COPAR))
    for a, b, c, d in permutations(range(len(web)), 4):
        for kind, tag in tags:
            if (
                rel(a, b) is not kind
                and rel(a, d) is not kind
                and rel(c, d) is not kind
                and rel(a, c) is kind
                and rel(b, d) is kind
                and rel(b, c) is kind
            ):
                report.violations.append(Violation(tag, (a, b, c, d)))
    return report
