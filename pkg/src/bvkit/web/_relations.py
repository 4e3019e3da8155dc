"""Relation webs: pairwise structural relations between leaf occurrences."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from enum import Enum
from itertools import combinations

from bvkit.exceptions import WebError
from bvkit.structure import Kind, Leaf, OccurrenceTable, Structure

__all__ = ["Relation", "WebCandidate", "RelationWeb", "web_of"]


class Relation(str, Enum):
    """Structural relation between two occurrences ``i`` and ``j``.

    `SEQ` means ``i`` comes before ``j``, `COSEQ` that it comes after.
    """

    SEQ = "seq"
    COSEQ = "coseq"
    PAR = "par"
    COPAR = "copar"

    def inverse(self) -> Relation:
        """The relation seen from the other occurrence."""
        if self is Relation.SEQ:
            return Relation.COSEQ
        if self is Relation.COSEQ:
            return Relation.SEQ
        return self

    @property
    def family(self) -> Relation:
        """`SEQ` for both directions of seq, the relation itself otherwise."""
        return Relation.SEQ if self is Relation.COSEQ else self

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    Relation.SEQ: "<|",
    Relation.COSEQ: "|>",
    Relation.PAR: "||",
    Relation.COPAR: "~~",
}

_KIND_RELATION = {Kind.PAR: Relation.PAR, Kind.COPAR: Relation.COPAR, Kind.SEQ: Relation.SEQ}

Pair = tuple[int, int]


class WebCandidate:
    """Occurrences with a relation assigned to every unordered pair.

    Parameters
    ----------
    labels : Sequence[Leaf]
        Label of each occurrence; occurrence ``i`` is ``labels[i]``.
    relations : Mapping[tuple[int, int], Relation] | Iterable[tuple[int, int, Relation]]
        Relation of each pair. A pair may be given in either order;
        ``(j, i, SEQ)`` is stored as ``(i, j, COSEQ)``.

    Raises
    ------
    WebError
        If an occurrence is related to itself, a pair is given twice or
        a pair is missing.
    """

    def __init__(
        self,
        labels: Sequence[Leaf],
        relations: Mapping[Pair, Relation] | Iterable[tuple[int, int, Relation]],
    ) -> None:
        self._labels = tuple(labels)
        size = len(self._labels)
        items: Iterable[tuple[int, int, Relation]]
        if isinstance(relations, Mapping):
            items = ((i, j, r) for (i, j), r in relations.items())
        else:
            items = relations
        table: dict[Pair, Relation] = {}
        for i, j, rel in items:
            rel = Relation(rel)
            if i == j:
                raise WebError(f"occurrence {i} is related to itself")
            if not (0 <= i < size and 0 <= j < size):
                raise WebError(f"pair ({i}, {j}) is out of range for {size} occurrences")
            key, value = ((i, j), rel) if i < j else ((j, i), rel.inverse())
            if key in table:
                raise WebError(f"pair {key} is related twice")
            table[key] = value
        missing = [p for p in combinations(range(size), 2) if p not in table]
        if missing:
            raise WebError(f"{len(missing)} pairs have no relation, first {missing[0]}")
        self._table = table

    @property
    def labels(self) -> tuple[Leaf, ...]:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def relation(self, i: int, j: int) -> Relation:
        """Relation of occurrence *i* to occurrence *j*."""
        if i == j:
            raise WebError(f"occurrence {i} has no relation to itself")
        if i < j:
            return self._table[(i, j)]
        return self._table[(j, i)].inverse()

    def pairs(self) -> Iterator[tuple[int, int, Relation]]:
        """Every pair ``i < j`` with its relation."""
        for (i, j), rel in sorted(self._table.items()):
            yield i, j, rel

    def restrict(self, indices: Iterable[int]) -> WebCandidate:
        """Sub-web on *indices*, renumbered in the given order."""
        keep = list(indices)
        return WebCandidate(
            [self._labels[i] for i in keep],
            {
                (a, b): self.relation(keep[a], keep[b])
                for a, b in combinations(range(len(keep)), 2)
            },
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WebCandidate):
            return NotImplemented
        return self._labels == other._labels and self._table == other._table

    def __hash__(self) -> int:
        return hash((self._labels, frozenset(self._table.items())))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{self._labels[i]} {rel.symbol} {self._labels[j]}" for i, j, rel in self.pairs()
        )
        return f"{type(self).__name__}({body})"


class RelationWeb(WebCandidate):
    """The relation web of a structure.

    Occurrence ``i`` is entry ``i`` of `occurrences`.
    """

    def __init__(self, structure: Structure) -> None:
        self.structure = structure
        self.occurrences = OccurrenceTable(structure)
        relations: dict[Pair, Relation] = {}

        def walk(node: Structure, first: int) -> int:
            if node.is_leaf:
                return first + 1
            bounds: list[tuple[int, int]] = []
            start = first
            for child in node.children:
                end = walk(child, start)
                bounds.append((start, end))
                start = end
            rel = _KIND_RELATION.get(node.kind)
            if rel is not None:
                for (lo1, hi1), (lo2, hi2) in combinations(bounds, 2):
                    for i in range(lo1, hi1):
                        for j in range(lo2, hi2):
                            relations[(i, j)] = rel
            return start

        walk(structure, 0)
        super().__init__(self.occurrences.labels, relations)


def web_of(s: Structure) -> RelationWeb:
    """Compute the relation web of a canonical structure.

    Examples
    --------
    >>> from bvkit.structure import parse
    >>> web_of(parse("[a,b]")).relation(0, 1)
    <Relation.PAR: 'par'>
    """
    return RelationWeb(s)
