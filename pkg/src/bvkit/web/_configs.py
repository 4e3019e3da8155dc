"""Four-occurrence configurations that rule out provability."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, product

from bvkit.exceptions import DuplicateAtomsError
from bvkit.structure import Atom, parse
from bvkit.web._relations import RelationWeb, WebCandidate, web_of

__all__ = ["FORBIDDEN_PATTERNS", "ForbiddenConfig", "forbidden_configs"]

FORBIDDEN_PATTERNS: tuple[str, ...] = (
    "[(a,~b),(~a,b)]",
    "[<a;~b>,(~a,b)]",
    "[<a;~b>,<b;~a>]",
)
"""Structures over two dual pairs whose webs are the forbidden configurations."""


@dataclass(frozen=True)
class ForbiddenConfig:
    """A match of pattern number `pattern` (index in `FORBIDDEN_PATTERNS`).

    `roles` maps the pattern atoms ``a`` and ``b`` to the atoms of the web
    playing them; their duals play ``~a`` and ``~b``.
    """

    pattern: int
    roles: tuple[tuple[str, Atom], ...]
    occurrences: tuple[int, int, int, int]

    @property
    def structure(self) -> str:
        return FORBIDDEN_PATTERNS[self.pattern]


@cache
def _pattern_webs() -> tuple[tuple[RelationWeb, dict[Atom, int]], ...]:
    webs = []
    for text in FORBIDDEN_PATTERNS:
        web = web_of(parse(text))
        index = {label: i for i, label in enumerate(web.labels) if isinstance(label, Atom)}
        webs.append((web, index))
    return tuple(webs)


_A, _B = Atom("a"), Atom("b")


def forbidden_configs(web: WebCandidate) -> list[ForbiddenConfig]:
    """Find every forbidden configuration among two dual atom pairs of *web*.

    For each two atoms ``x``, ``y`` occurring with both polarities, the
    four occurrences of ``x``, ``~x``, ``y``, ``~y`` are compared with each
    pattern under every assignment of the pattern roles, swapping the
    pairs and the polarity inside each pair.

    Raises
    ------
    DuplicateAtomsError
        If a label occurs more than once in *web*.
    """
    labels = web.labels
    if len(set(labels)) != len(labels):
        raise DuplicateAtomsError("forbidden configurations need pairwise distinct atoms")
    where = {label: i for i, label in enumerate(labels)}
    dual_pairs = sorted(
        {
            label.positive
            for label in labels
            if isinstance(label, Atom) and label.dual() in where
        },
        key=lambda a: a.sort_key,
    )
    found: list[ForbiddenConfig] = []
    for x, y in combinations(dual_pairs, 2):
        for number, (pattern, index) in enumerate(_pattern_webs()):
            for (first, second), flip_a, flip_b in product(((x, y), (y, x)), (False, True), (False, True)):
                role_a = first.dual() if flip_a else first
                role_b = second.dual() if flip_b else second
                roles = {
                    _A: role_a,
                    _A.dual(): role_a.dual(),
                    _B: role_b,
                    _B.dual(): role_b.dual(),
                }
                matched = all(
                    pattern.relation(index[p], index[q])
                    is web.relation(where[roles[p]], where[roles[q]])
                    for p, q in combinations(roles, 2)
                )
                if matched:
                    found.append(
                        ForbiddenConfig(
                            number,
                            (("a", role_a), ("b", role_b)),
                            tuple(where[roles[k]] for k in roles),  # type: ignore[arg-type]
                        )
                    )
                    break
    return found
