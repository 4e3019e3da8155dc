"""The alpha-structure family and the structures S_n."""

from __future__ import annotations

from dataclasses import dataclass, field

from bvkit.exceptions import IndexClashError, NotFlatError, NotGeneratedError
from bvkit.structure import (
    UNIT,
    Atom,
    AtomNode,
    Kind,
    OccurrenceTable,
    Structure,
    make,
)

__all__ = [
    "Index",
    "AlphaParams",
    "AlphaStructure",
    "alpha",
    "s_n",
    "atom_count",
    "alpha_zero_depths",
    "check_flat",
]

Index = tuple[int, ...]


def _atom(name: str, u: Index, negated: bool = False) -> Structure:
    return AtomNode(Atom(name, negated, u))


def check_flat(s: Structure, what: str = "parameter") -> None:
    """Raise `NotFlatError` unless *s* is the unit, an atom or a par of atoms."""
    if s == UNIT or isinstance(s, AtomNode):
        return
    if s.kind is Kind.PAR and all(isinstance(c, AtomNode) for c in s.children):
        return
    raise NotFlatError(f"{what} {s} is not a flat par of atoms")


@dataclass(frozen=True)
class AlphaParams:
    """Parameters of ``alpha_n(u, R, T)``.

    Attributes
    ----------
    n : int
        Nesting level.
    u : Index
        Index of the generated atoms at the outermost level.
    r : Structure
        Flat par structure put in par with ``a_u`` and ``b_u``.
    t : Structure
        Flat par structure put in par with ``~b_u`` and ``~c_u``.
    """

    n: int
    u: Index = (0,)
    r: Structure = UNIT
    t: Structure = UNIT

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be a natural number")
        check_flat(self.r, "R")
        check_flat(self.t, "T")
        clashes = sorted(
            str(item.leaf)
            for side in (self.r, self.t)
            for item in OccurrenceTable(side)
            if isinstance(item.leaf, Atom)
            and item.leaf.name in ("a", "b", "c")
            and item.leaf.index[: len(self.u)] == self.u
        )
        if clashes:
            raise IndexClashError(f"parameters reuse generated atoms {', '.join(clashes)}")

    def children(self) -> tuple[AlphaParams, AlphaParams]:
        """Parameters of the two ``alpha_{n-1}`` nested in ``alpha_n``."""
        u = self.u
        left = AlphaParams(self.n - 1, (*u, 0), _atom("a", u), make(Kind.PAR, (_atom("b", u), self.r)))
        right = AlphaParams(
            self.n - 1,
            (*u, 1),
            _atom("b", u, True),
            make(Kind.PAR, (_atom("c", u, True), self.t)),
        )
        return left, right


@dataclass(frozen=True)
class AlphaStructure:
    """A generated structure together with the index of each alpha_0 block."""

    structure: Structure
    params: AlphaParams
    blocks: tuple[Index, ...] = field(default=())

    def __str__(self) -> str:
        return str(self.structure)


def _base(p: AlphaParams) -> Structure:
    u = p.u
    return make(
        Kind.PAR,
        (
            make(Kind.SEQ, (make(Kind.PAR, (_atom("a", u), _atom("b", u), p.r)), _atom("c", u))),
            make(Kind.SEQ, (_atom("a", u, True), make(Kind.PAR, (_atom("b", u, True), _atom("c", u, True), p.t)))),
        ),
    )


def alpha(p: AlphaParams) -> AlphaStructure:
    """Build ``alpha_n(u, R, T)``.

    ``alpha_0(u, R, T) = [<[a_u,b_u,R];c_u>, <~a_u;[~b_u,~c_u,T]>]`` and
    ``alpha_n`` puts ``alpha_{n-1}(u.0, a_u, [b_u,R])`` before ``c_u`` and
    ``alpha_{n-1}(u.1, ~b_u, [~c_u,T])`` after ``~a_u``, in par.
    """
    if p.n == 0:
        return AlphaStructure(_base(p), p, (p.u,))
    left, right = (alpha(q) for q in p.children())
    u = p.u
    s = make(
        Kind.PAR,
        (
            make(Kind.SEQ, (left.structure, _atom("c", u))),
            make(Kind.SEQ, (_atom("a", u, True), right.structure)),
        ),
    )
    return AlphaStructure(s, p, left.blocks + right.blocks)


def s_n(n: int) -> AlphaStructure:
    """``S_n = alpha_n(0, o, o)``."""
    return alpha(AlphaParams(n))


def atom_count(n: int) -> int:
    """Number of atom occurrences of ``S_n``."""
    return 6 * (2 ** (n + 1) - 1)


def alpha_zero_depths(s: AlphaStructure | Structure) -> list[int]:
    """Context depth of every alpha_0 block of a generated structure.

    Raises
    ------
    NotGeneratedError
        If *s* is a plain structure without block information.
    """
    if not isinstance(s, AlphaStructure):
        raise NotGeneratedError("alpha_0 blocks are only known for generated structures")
    table = OccurrenceTable(s.structure)
    depths = []
    for u in s.blocks:
        (where,) = table.find(Atom("c", False, u))
        # c_u is the last child of <[a_u,b_u,R];c_u>, itself a child of the block
        depths.append(len(table[where].path) - 2)
    return depths

