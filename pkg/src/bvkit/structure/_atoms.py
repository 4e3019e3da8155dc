"""Atoms and structure variables, the leaves of a structure."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

__all__ = ["Atom", "Variable", "Leaf", "format_index"]


def format_index(index: tuple[int, ...]) -> str:
    """Render an atom index as ``_0.1.2`` (empty string for no index)."""
    if not index:
        return ""
    return "_" + ".".join(str(i) for i in index)


@dataclass(frozen=True, slots=True)
class Atom:
    """A positive or negative atom.

    Attributes
    ----------
    name : str
        Non-empty identifier.
    negated : bool
        `True` for the negative atom.
    index : tuple[int, ...]
        Index for the atoms of the counterexample family; empty when unused.
    """

    name: str
    negated: bool = False
    index: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("atom name must be non-empty")

    def dual(self) -> Atom:
        """Return the atom with the opposite polarity."""
        return replace(self, negated=not self.negated)

    @property
    def positive(self) -> Atom:
        """The positive atom of this dual pair."""
        return replace(self, negated=False) if self.negated else self

    @property
    def sort_key(self) -> tuple[str, tuple[int, ...], bool]:
        return (self.name, self.index, self.negated)

    @property
    def label(self) -> str:
        return ("~" if self.negated else "") + self.name + format_index(self.index)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, slots=True)
class Variable:
    """A structure variable of a structure scheme.

    Attributes
    ----------
    name : str
        Identifier; capitalized in the text syntax.
    negated : bool
        `True` when the variable occurs under a negation.
    atomic : bool
        `True` for variables that only stand for atoms (``?x`` in text).
    """

    name: str
    negated: bool = False
    atomic: bool = False

    def dual(self) -> Variable:
        return replace(self, negated=not self.negated)

    @property
    def positive(self) -> Variable:
        return replace(self, negated=False) if self.negated else self

    @property
    def sort_key(self) -> tuple[str, bool, bool]:
        return (self.name, self.atomic, self.negated)

    @property
    def label(self) -> str:
        return ("~" if self.negated else "") + ("?" if self.atomic else "") + self.name

    def __str__(self) -> str:
        return self.label


Leaf = Union[Atom, Variable]
"""An occurrence label: an atom, or a variable inside a scheme."""
