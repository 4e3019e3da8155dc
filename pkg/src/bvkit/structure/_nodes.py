"""Structure trees and their canonical form modulo the equational theory.

A structure is *canonical* when

- no unit occurs below the root,
- no node has a child of its own kind (associativity flattened),
- par and copar children are sorted by `Structure.key`,
- negation only occurs on leaves.

Two structures are equal modulo associativity, commutativity, unit,
singleton and negation laws iff their canonical forms are identical,
so canonical structures can be hashed and compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import TYPE_CHECKING, Any, ClassVar, Iterable, Union

from bvkit.structure._atoms import Atom, Leaf, Variable

if TYPE_CHECKING:
    from collections.abc import Iterator

__all__ = [
    "Kind",
    "Structure",
    "Unit",
    "Hole",
    "AtomNode",
    "VarNode",
    "Composite",
    "Par",
    "Copar",
    "Seq",
    "Negation",
    "Term",
    "UNIT",
    "HOLE",
    "canonicalize",
    "negate",
    "unit",
    "atom",
    "var",
    "par",
    "copar",
    "seq",
    "neg",
    "make",
    "leaves",
    "has_distinct_atoms",
]


class Kind(IntEnum):
    """Node kinds, in the rank used to sort par and copar children."""

    UNIT = 0
    HOLE = 1
    ATOM = 2
    VAR = 3
    PAR = 4
    COPAR = 5
    SEQ = 6


@dataclass(frozen=True, slots=True, eq=False)
class Structure:
    """Base class of all structure nodes.

    Instances are immutable and hash by value; the hash and the sort key
    are computed once at construction.
    """

    kind: ClassVar[Kind]
    _hash: int = field(init=False, repr=False, compare=False)
    _key: tuple[Any, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        key = self._make_key()
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def _make_key(self) -> tuple[Any, ...]:
        return (int(self.kind),)

    @property
    def key(self) -> tuple[Any, ...]:
        """Total order on structures: kind rank first, then payload."""
        return self._key

    @property
    def children(self) -> tuple[Structure, ...]:
        return ()

    @property
    def is_leaf(self) -> bool:
        return self.kind in (Kind.ATOM, Kind.VAR)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Structure):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __lt__(self, other: Structure) -> bool:
        return self._key < other._key

    def __str__(self) -> str:
        from bvkit.structure._text import to_text

        return to_text(self)


@dataclass(frozen=True, slots=True, eq=False)
class Unit(Structure):
    """The unit, neutral for par, copar and seq."""

    kind: ClassVar[Kind] = Kind.UNIT

    def __repr__(self) -> str:
        return "Unit()"


@dataclass(frozen=True, slots=True, eq=False)
class Hole(Structure):
    """The hole of a structure context; never part of a plain structure."""

    kind: ClassVar[Kind] = Kind.HOLE

    def __repr__(self) -> str:
        return "Hole()"


@dataclass(frozen=True, slots=True, eq=False)
class AtomNode(Structure):
    atom: Atom
    kind: ClassVar[Kind] = Kind.ATOM

    def _make_key(self) -> tuple[Any, ...]:
        return (int(Kind.ATOM), self.atom.sort_key)

    @property
    def leaf(self) -> Atom:
        return self.atom

    def __repr__(self) -> str:
        return f"AtomNode({self.atom.label})"


@dataclass(frozen=True, slots=True, eq=False)
class VarNode(Structure):
    variable: Variable
    kind: ClassVar[Kind] = Kind.VAR

    def _make_key(self) -> tuple[Any, ...]:
        return (int(Kind.VAR), self.variable.sort_key)

    @property
    def leaf(self) -> Variable:
        return self.variable

    def __repr__(self) -> str:
        return f"VarNode({self.variable.label})"


@dataclass(frozen=True, slots=True, eq=False)
class Composite(Structure):
    """A par, copar or seq node.

    Constructing a node directly does not canonicalize it; use the
    `par`, `copar` and `seq` builders or `canonicalize` for that.
    """

    members: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.members, tuple):
            object.__setattr__(self, "members", tuple(self.members))
        Structure.__post_init__(self)

    def _make_key(self) -> tuple[Any, ...]:
        return (int(self.kind), tuple(_term_key(m) for m in self.members))

    @property
    def children(self) -> tuple[Structure, ...]:
        return self.members  # type: ignore[return-value]

    def __repr__(self) -> str:
        inner = ", ".join(repr(m) for m in self.members)
        return f"{type(self).__name__}({inner})"


@dataclass(frozen=True, slots=True, eq=False)
class Par(Composite):
    kind: ClassVar[Kind] = Kind.PAR


@dataclass(frozen=True, slots=True, eq=False)
class Copar(Composite):
    kind: ClassVar[Kind] = Kind.COPAR


@dataclass(frozen=True, slots=True, eq=False)
class Seq(Composite):
    kind: ClassVar[Kind] = Kind.SEQ


@dataclass(frozen=True, slots=True)
class Negation:
    """Negation of a raw term; eliminated by `canonicalize`."""

    body: Term


Term = Union[Structure, Negation]
"""A raw structure tree, possibly non-canonical and containing negations."""

UNIT = Unit()
HOLE = Hole()

_NODE_TYPES: dict[Kind, type[Composite]] = {
    Kind.PAR: Par,
    Kind.COPAR: Copar,
    Kind.SEQ: Seq,
}
_DUAL_KIND = {Kind.PAR: Kind.COPAR, Kind.COPAR: Kind.PAR, Kind.SEQ: Kind.SEQ}


def _term_key(term: Term) -> tuple[Any, ...]:
    if isinstance(term, Negation):
        return (-1, _term_key(term.body))
    return term.key


def make(kind: Kind, children: Iterable[Structure]) -> Structure:
    """Build the canonical node of *kind* over canonical *children*.

    Children of the same kind are flattened, units dropped, a single
    remaining child is returned as is and par/copar children are sorted.

    Parameters
    ----------
    kind : Kind
        One of `Kind.PAR`, `Kind.COPAR`, `Kind.SEQ`.
    children : Iterable[Structure]
        Canonical structures.

    Returns
    -------
    Structure
        A canonical structure.
    """
    flat: list[Structure] = []
    for child in children:
        if child.kind is Kind.UNIT:
            continue
        if child.kind is kind:
            flat.extend(child.children)
        else:
            flat.append(child)
    if not flat:
        return UNIT
    if len(flat) == 1:
        return flat[0]
    if kind is not Kind.SEQ:
        flat.sort(key=_term_key)
    return _NODE_TYPES[kind](tuple(flat))


def _canon(term: Term, negated: bool) -> Structure:
    if isinstance(term, Negation):
        return _canon(term.body, not negated)
    if isinstance(term, AtomNode):
        return AtomNode(term.atom.dual()) if negated else term
    if isinstance(term, VarNode):
        return VarNode(term.variable.dual()) if negated else term
    if isinstance(term, Composite):
        kind = _DUAL_KIND[term.kind] if negated else term.kind
        return make(kind, (_canon(m, negated) for m in term.members))
    if isinstance(term, Hole) and negated:
        raise ValueError("a hole cannot occur under a negation")
    return term


def canonicalize(term: Term) -> Structure:
    """Return the canonical representative of the =-class of *term*.

    Examples
    --------
    >>> canonicalize(Par((UNIT, atom("a"))))
    AtomNode(a)
    """
    return _canon(term, False)


def negate(s: Structure) -> Structure:
    """De Morgan dual of a canonical structure, in canonical form."""
    return _canon(s, True)


def unit() -> Structure:
    return UNIT


def atom(name: str, negated: bool = False, index: Iterable[int] = ()) -> Structure:
    """Build an atom leaf."""
    return AtomNode(Atom(name, negated, tuple(index)))


def var(name: str, negated: bool = False, atomic: bool = False) -> Structure:
    """Build a structure-variable leaf."""
    return VarNode(Variable(name, negated, atomic))


def par(*children: Term) -> Structure:
    return make(Kind.PAR, (canonicalize(c) for c in children))


def copar(*children: Term) -> Structure:
    return make(Kind.COPAR, (canonicalize(c) for c in children))


def seq(*children: Term) -> Structure:
    return make(Kind.SEQ, (canonicalize(c) for c in children))


def neg(term: Term) -> Structure:
    return _canon(term, True)


def iter_leaves(s: Structure) -> Iterator[Leaf]:
    """Yield the leaf labels of *s* left to right."""
    if isinstance(s, (AtomNode, VarNode)):
        yield s.leaf
        return
    for child in s.children:
        yield from iter_leaves(child)


def leaves(s: Structure) -> list[Leaf]:
    """Leaf labels of *s* in left-to-right order."""
    return list(iter_leaves(s))


def has_distinct_atoms(s: Structure) -> bool:
    """Whether every leaf label of *s* occurs once."""
    labels = leaves(s)
    return len(set(labels)) == len(labels)
