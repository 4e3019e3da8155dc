"""Positions, contexts and occurrences inside canonical structures."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import overload

from bvkit.structure._atoms import Leaf
from bvkit.structure._nodes import (
    HOLE,
    UNIT,
    AtomNode,
    Kind,
    Structure,
    VarNode,
    make,
)

__all__ = [
    "Path",
    "PositionedContext",
    "Occurrence",
    "OccurrenceTable",
    "subterm_at",
    "replace_at",
    "find_hole",
    "positions",
    "occurrences",
    "context_depth",
    "depth_of_structure",
    "is_substructure",
]

Path = tuple[int, ...]
"""Child indices from the root of a canonical structure down to a node."""


def subterm_at(s: Structure, path: Path) -> Structure:
    """Return the node of *s* at *path*.

    Raises
    ------
    ValueError
        If *path* does not address a node of *s*.
    """
    node = s
    for step in path:
        children = node.children
        if not 0 <= step < len(children):
            raise ValueError(f"no node at path {list(path)} in {s}")
        node = children[step]
    return node


def replace_at(s: Structure, path: Path, replacement: Structure) -> Structure:
    """Replace the node at *path* and re-canonicalize the ancestors."""
    if not path:
        return replacement
    head, rest = path[0], path[1:]
    children = list(s.children)
    children[head] = replace_at(children[head], rest, replacement)
    return make(s.kind, children)


def find_hole(s: Structure) -> Path:
    """Path of the hole of a context structure."""
    if s.kind is Kind.HOLE:
        return ()
    for i, child in enumerate(s.children):
        try:
            return (i, *find_hole(child))
        except LookupError:
            continue
    raise LookupError(f"{s} has no hole")


@dataclass(frozen=True)
class PositionedContext:
    """A one-hole context given as a position inside a structure.

    The hole sits at the node addressed by `path`; when `group` is not
    empty it only covers the children of that node listed in `group`
    (any subset for par and copar, a contiguous run for seq).

    Attributes
    ----------
    root : Structure
        The canonical structure the position lives in.
    path : Path
        Path to the node the hole is at, or whose children it groups.
    group : tuple[int, ...]
        Sorted child indices grouped into the hole; empty for the whole node.
    """

    root: Structure
    path: Path = ()
    group: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        node = subterm_at(self.root, self.path)
        group = tuple(sorted(set(self.group)))
        if group:
            size = len(node.children)
            if size == 0 or group[0] < 0 or group[-1] >= size:
                raise ValueError(f"grouping {list(group)} does not fit {node}")
            if node.kind is Kind.SEQ and group[-1] - group[0] + 1 != len(group):
                raise ValueError("a seq grouping must be contiguous")
            if len(group) == 1:
                object.__setattr__(self, "path", (*self.path, group[0]))
                group = ()
            elif len(group) == size:
                group = ()
        object.__setattr__(self, "group", group)

    @property
    def node(self) -> Structure:
        """The node at `path`."""
        return subterm_at(self.root, self.path)

    @property
    def substructure(self) -> Structure:
        """The structure filling the hole."""
        node = self.node
        if not self.group:
            return node
        return make(node.kind, [node.children[i] for i in self.group])

    @property
    def depth(self) -> int:
        """Number of connectives between the root and the hole."""
        return len(self.path) + (1 if self.group else 0)

    def plug(self, filler: Structure) -> Structure:
        """Replace the contents of the hole by *filler*, canonically."""
        node = self.node
        if not self.group:
            return replace_at(self.root, self.path, filler)
        children = node.children
        if node.kind is Kind.SEQ:
            first, last = self.group[0], self.group[-1]
            rebuilt = [*children[:first], filler, *children[last + 1 :]]
        else:
            rebuilt = [c for i, c in enumerate(children) if i not in self.group]
            rebuilt.append(filler)
        return replace_at(self.root, self.path, make(node.kind, rebuilt))

    def hole(self) -> Structure:
        """The context with `HOLE` in place of its contents."""
        return self.plug(HOLE)

    def __str__(self) -> str:
        from bvkit.structure._text import to_text

        return to_text(self.hole())


def _groupings(node: Structure) -> Iterator[tuple[int, ...]]:
    size = len(node.children)
    if node.kind is Kind.SEQ:
        for length in range(2, size):
            for start in range(size - length + 1):
                yield tuple(range(start, start + length))
    else:
        for length in range(2, size):
            yield from combinations(range(size), length)


def positions(s: Structure, *, groupings: bool = True) -> Iterator[PositionedContext]:
    """Enumerate every position of *s*, outermost first.

    Each node is a position; with `groupings` each proper sub-par,
    sub-copar or contiguous sub-seq of two or more children is one too.
    """

    def walk(node: Structure, path: Path) -> Iterator[PositionedContext]:
        yield PositionedContext(s, path)
        if groupings:
            for group in _groupings(node):
                yield PositionedContext(s, path, group)
        for i, child in enumerate(node.children):
            yield from walk(child, (*path, i))

    yield from walk(s, ())


@dataclass(frozen=True)
class Occurrence:
    """A leaf occurrence: its index in the table, its label and its path."""

    index: int
    leaf: Leaf
    path: Path


class OccurrenceTable(Sequence[Occurrence]):
    """Leaf occurrences of a structure, numbered left to right.

    Parameters
    ----------
    structure : Structure
        The structure whose leaves are numbered.
    """

    def __init__(self, structure: Structure) -> None:
        self.structure = structure
        self._items: list[Occurrence] = []
        self._by_leaf: dict[Leaf, list[int]] = {}

        def walk(node: Structure, path: Path) -> None:
            if isinstance(node, (AtomNode, VarNode)):
                item = Occurrence(len(self._items), node.leaf, path)
                self._items.append(item)
                self._by_leaf.setdefault(node.leaf, []).append(item.index)
                return
            for i, child in enumerate(node.children):
                walk(child, (*path, i))

        walk(structure, ())

    @overload
    def __getitem__(self, index: int) -> Occurrence: ...

    @overload
    def __getitem__(self, index: slice) -> Sequence[Occurrence]: ...

    def __getitem__(self, index: int | slice) -> Occurrence | Sequence[Occurrence]:
        return self._items[index]

    def __len__(self) -> int:
        return len(self._items)

    @property
    def labels(self) -> list[Leaf]:
        return [item.leaf for item in self._items]

    def find(self, leaf: Leaf) -> list[int]:
        """Indices of the occurrences labelled *leaf*."""
        return list(self._by_leaf.get(leaf, ()))

    def is_distinct(self) -> bool:
        return all(len(v) == 1 for v in self._by_leaf.values())


def occurrences(s: Structure) -> OccurrenceTable:
    return OccurrenceTable(s)


def context_depth(context: PositionedContext) -> int:
    return context.depth


def depth_of_structure(s: Structure) -> int:
    """Greatest number of connectives above a leaf of *s*; 0 for leaves and unit."""
    return max((len(item.path) for item in OccurrenceTable(s)), default=0)


def is_substructure(r: Structure, s: Structure) -> bool:
    """Whether *r* fills the hole of some context of *s*."""
    if r == UNIT or r == s:
        return True
    if r.kind in (Kind.ATOM, Kind.VAR):
        return any(p.substructure == r for p in positions(s, groupings=False))
    return any(p.substructure == r for p in positions(s))
