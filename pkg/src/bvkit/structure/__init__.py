"""Structures of the calculus of structures, in canonical form."""

from bvkit.structure._atoms import Atom, Leaf, Variable, format_index
from bvkit.structure._context import (
    Occurrence,
    OccurrenceTable,
    Path,
    PositionedContext,
    context_depth,
    depth_of_structure,
    find_hole,
    is_substructure,
    occurrences,
    positions,
    replace_at,
    subterm_at,
)
from bvkit.structure._nodes import (
    HOLE,
    UNIT,
    AtomNode,
    Composite,
    Copar,
    Hole,
    Kind,
    Negation,
    Par,
    Seq,
    Structure,
    Term,
    Unit,
    VarNode,
    atom,
    canonicalize,
    copar,
    has_distinct_atoms,
    leaves,
    make,
    neg,
    negate,
    par,
    seq,
    unit,
    var,
)
from bvkit.structure._text import parse, parse_context, parse_scheme, to_text

__all__ = [
    "Atom",
    "AtomNode",
    "Composite",
    "Copar",
    "HOLE",
    "Hole",
    "Kind",
    "Leaf",
    "Negation",
    "Occurrence",
    "OccurrenceTable",
    "Par",
    "Path",
    "PositionedContext",
    "Seq",
    "Structure",
    "Term",
    "UNIT",
    "Unit",
    "VarNode",
    "Variable",
    "atom",
    "canonicalize",
    "context_depth",
    "copar",
    "depth_of_structure",
    "find_hole",
    "format_index",
    "has_distinct_atoms",
    "is_substructure",
    "leaves",
    "make",
    "neg",
    "negate",
    "occurrences",
    "par",
    "parse",
    "parse_context",
    "parse_scheme",
    "positions",
    "replace_at",
    "seq",
    "subterm_at",
    "to_text",
    "unit",
    "var",
]
