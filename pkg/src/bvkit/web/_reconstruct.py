"""Recover a structure from a web candidate by merging partitions."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from bvkit.exceptions import NotAWebError
from bvkit.structure import UNIT, Atom, AtomNode, Kind, Structure, VarNode, make
from bvkit.web._relations import Relation, WebCandidate

__all__ = ["Reconstruction", "reconstruct"]

logger = logging.getLogger("bvkit")


@dataclass(frozen=True)
class Reconstruction:
    """Result of `reconstruct`.

    Attributes
    ----------
    structure : Structure
        The structure whose web is the input candidate.
    trace : list[tuple[Structure, ...]]
        Partition states, from one partition per occurrence to the final
        single partition; each state lists the partitions by their least
        occurrence.
    """

    structure: Structure
    trace: list[tuple[Structure, ...]] = field(default_factory=list)

    @property
    def merges(self) -> int:
        return max(len(self.trace) - 1, 0)


@dataclass
class _Part:
    members: tuple[int, ...]
    structure: Structure


def _uniform(web: WebCandidate, left: _Part, right: _Part) -> Relation | None:
    found: Relation | None = None
    for i in left.members:
        for j in right.members:
            rel = web.relation(i, j)
            if found is None:
                found = rel
            elif rel is not found:
                return None
    return found


def _same_outside(web: WebCandidate, merged: tuple[int, ...], outside: list[int]) -> bool:
    head, rest = merged[0], merged[1:]
    for c in outside:
        expected = web.relation(head, c)
        if any(web.relation(x, c) is not expected for x in rest):
            return False
    return True


def _merge(rel: Relation, left: _Part, right: _Part) -> _Part:
    members = tuple(sorted(left.members + right.members))
    if rel is Relation.PAR:
        s = make(Kind.PAR, [left.structure, right.structure])
    elif rel is Relation.COPAR:
        s = make(Kind.COPAR, [left.structure, right.structure])
    elif rel is Relation.SEQ:
        s = make(Kind.SEQ, [left.structure, right.structure])
    else:
        s = make(Kind.SEQ, [right.structure, left.structure])
    return _Part(members, s)


def reconstruct(web: WebCandidate) -> Reconstruction:
    """Rebuild the structure of *web*.

    Starts from one partition per occurrence and repeatedly merges two
    partitions that are uniformly related to each other and related in
    the same way to every other occurrence. The lexicographically least
    eligible pair is merged first.

    Raises
    ------
    NotAWebError
        If more than one partition is left and no merge applies.
    """
    parts = [
        _Part((i,), AtomNode(label) if isinstance(label, Atom) else VarNode(label))
        for i, label in enumerate(web.labels)
    ]
    if not parts:
        return Reconstruction(UNIT, [()])
    trace = [tuple(p.structure for p in parts)]
    everything = set(range(len(web)))
    while len(parts) > 1:
        for x, y in combinations(range(len(parts)), 2):
            rel = _uniform(web, parts[x], parts[y])
            if rel is None:
                continue
            merged = parts[x].members + parts[y].members
            outside = sorted(everything.difference(merged))
            if not _same_outside(web, merged, outside):
                continue
            new = _merge(rel, parts[x], parts[y])
            parts = [p for k, p in enumerate(parts) if k not in (x, y)]
            parts.append(new)
            parts.sort(key=lambda p: p.members[0])
            trace.append(tuple(p.structure for p in parts))
            logger.debug("merged into %s, %d partitions left", new.structure, len(parts))
            break
        else:
            raise NotAWebError(
                f"no merge applies with {len(parts)} partitions left", len(parts)
            )
    return Reconstruction(parts[0].structure, trace)
