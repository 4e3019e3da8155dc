"""Exception hierarchy shared by all bvkit subpackages."""

from __future__ import annotations

__all__ = [
    "BVError",
    "StructureSyntaxError",
    "WebError",
    "NotAWebError",
    "DuplicateAtomsError",
    "BadMatchingError",
    "BudgetExceededError",
    "DerivationFormatError",
    "AtomNotFoundError",
    "AmbiguousOccurrenceError",
    "InstanceError",
    "NotFlatError",
    "IndexClashError",
    "NotGeneratedError",
    "OccMismatchError",
    "EqualStructuresError",
    "NotShallowError",
]


class BVError(Exception):
    """Base class of every error raised by bvkit."""

    pass


class StructureSyntaxError(BVError, ValueError):
    """The text does not conform to the structure grammar.

    Parameters
    ----------
    message : str
        What went wrong.
    line : int
        1-based line of the offending character.
    column : int
        1-based column of the offending character.
    """

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class WebError(BVError, ValueError):
    """A web candidate relates an occurrence to itself, or misses or doubles a pair."""


class NotAWebError(BVError):
    """Reconstruction stopped with more than one partition left."""

    def __init__(self, message: str, partitions: int) -> None:
        super().__init__(message)
        self.partitions = partitions


class DuplicateAtomsError(BVError, ValueError):
    """An operation requiring pairwise distinct atoms got repeated labels."""


class BadMatchingError(BVError, ValueError):
    """An occurrence matching is not a bijection on the occurrences it relates."""


class BudgetExceededError(BVError, RuntimeError):
    """Proof search explored more memo entries than allowed.

    Parameters
    ----------
    explored : int
        Number of structures explored when the budget ran out.
    """

    def __init__(self, explored: int) -> None:
        super().__init__(f"search budget exceeded after {explored} structures")
        self.explored = explored


class DerivationFormatError(BVError, ValueError):
    """A serialized derivation is malformed.

    Parameters
    ----------
    message : str
        What went wrong.
    step : int | None
        Index of the offending step, if the problem is local to one step.
    """

    def __init__(self, message: str, step: int | None = None) -> None:
        where = f"step {step}: " if step is not None else ""
        super().__init__(where + message)
        self.step = step


class AtomNotFoundError(BVError, LookupError):
    """The atom (or its dual) does not occur in the conclusion."""


class AmbiguousOccurrenceError(BVError, ValueError):
    """The atom (or its dual) occurs more than once in the conclusion."""


class InstanceError(BVError):
    """A rule instance could not be placed in the structure it claims to rewrite."""


class NotFlatError(BVError, ValueError):
    """A parameter of an alpha-structure is not a flat par structure."""


class IndexClashError(BVError, ValueError):
    """A parameter reuses an indexed atom the generator is about to create."""


class NotGeneratedError(BVError, TypeError):
    """The structure carries no generator tags."""


class OccMismatchError(BVError, ValueError):
    """Two schemes do not have the same occurrence labels."""


class EqualStructuresError(BVError, ValueError):
    """The order on structures is only defined on distinct structures."""


class NotShallowError(BVError, ValueError):
    """A shallow system contains a rule that is not shallow.

    Parameters
    ----------
    rule : str
        Name of the offending rule.
    """

    def __init__(self, rule: str) -> None:
        super().__init__(f"rule {rule!r} is not shallow")
        self.rule = rule
