"""Structural checks on the generated family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from bvkit.structure import Atom, Kind, Path, Structure, make, negate
from bvkit.web import Relation

__all__ = ["DualPair", "check_no_dual_pars", "hexagon_relations"]


@dataclass(frozen=True)
class DualPair:
    """Substructures `positive` and `negative` in par at the node at `path`."""

    path: Path
    positive: Structure
    negative: Structure


def _take(pool: list[Structure], wanted: Structure) -> bool:
    for i, item in enumerate(pool):
        if item == wanted:
            del pool[i]
            return True
    return False


def check_no_dual_pars(s: Structure) -> list[DualPair]:
    """Find substructures of the form ``[P, ~P]`` in *s*.

    Every subset ``A`` of the children of each par node is tried as ``P``;
    a witness is reported when the remaining children contain the
    components of ``~P``. An empty list means *s* has no such substructure.
    """
    found: list[DualPair] = []

    def visit(node: Structure, path: Path) -> None:
        if node.kind is Kind.PAR:
            children = node.children
            indices = range(len(children))
            for size in range(1, len(children)):
                for chosen in combinations(indices, size):
                    p = make(Kind.PAR, [children[i] for i in chosen])
                    dual = negate(p)
                    if dual.key < p.key:
                        continue
                    pool = [children[i] for i in indices if i not in chosen]
                    wanted = dual.children if dual.kind is Kind.PAR else (dual,)
                    if all(_take(pool, w) for w in wanted):
                        found.append(DualPair(path, p, dual))
        for i, child in enumerate(node.children):
            visit(child, (*path, i))

    visit(s, ())
    return found


def hexagon_relations(u: tuple[int, ...] = (0,)) -> dict[tuple[Atom, Atom], Relation]:
    """The six relations forming the hexagon in the web of ``alpha_0(u, o, o)``."""
    a, b, c = (Atom(n, False, u) for n in "abc")
    return {
        (a, b): Relation.PAR,
        (b.dual(), c.dual()): Relation.PAR,
        (a, c): Relation.SEQ,
        (b, c): Relation.SEQ,
        (a.dual(), b.dual()): Relation.SEQ,
        (a.dual(), c.dual()): Relation.SEQ,
    }
