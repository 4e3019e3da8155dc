"""Derivation transformations: lifting into a context and deleting atom pairs."""

from __future__ import annotations

import logging

from bvkit.exceptions import AmbiguousOccurrenceError, AtomNotFoundError
from bvkit.structure import (
    UNIT,
    Atom,
    AtomNode,
    OccurrenceTable,
    PositionedContext,
    Structure,
    make,
)
from bvkit.prover._derivation import Derivation, Step, axiom
from bvkit.prover._locate import locate_step
from bvkit.prover._rules import RuleName

__all__ = ["lift", "delete_atom_pair", "erase_atoms"]

logger = logging.getLogger("bvkit")


def lift(derivation: Derivation, context: PositionedContext) -> Derivation:
    """Apply *derivation* inside *context*.

    Every structure ``X`` of the derivation becomes ``context.plug(X)``
    and every step is placed again in the larger structure. An axiom step
    is dropped, since its unit no longer stands alone.

    Parameters
    ----------
    derivation : Derivation
        Derivation to lift.
    context : PositionedContext
        Context whose hole receives the structures of `derivation`.
    """
    conclusion = context.plug(derivation.conclusion)
    state = conclusion
    steps: list[Step] = []
    for step in derivation.steps:
        if step.rule is RuleName.AXIOM:
            continue
        instance = step.instance
        premise = context.plug(step.premise)
        steps.append(
            Step(
                locate_step(
                    instance.rule,
                    state,
                    instance.redex,
                    instance.contractum,
                    premise,
                    trivial=instance.trivial,
                ),
                premise,
            )
        )
        state = premise
    return Derivation(conclusion, tuple(steps))


def erase_atoms(s: Structure, atoms: set[Atom]) -> Structure:
    """Replace every occurrence of *atoms* in *s* by the unit."""
    if isinstance(s, AtomNode):
        return UNIT if s.atom in atoms else s
    if not s.children:
        return s
    return make(s.kind, [erase_atoms(c, atoms) for c in s.children])


def delete_atom_pair(derivation: Derivation, atom: Atom) -> Derivation:
    """Replace *atom* and its dual by the unit throughout *derivation*.

    Steps that become trivial, such as the ai↓ consuming the pair, are
    dropped; the other steps remain instances of their rules and are
    placed again in the reduced structures.

    Raises
    ------
    AtomNotFoundError
        If *atom* or its dual does not occur in the conclusion.
    AmbiguousOccurrenceError
        If either occurs more than once in the conclusion.
    """
    table = OccurrenceTable(derivation.conclusion)
    for label in (atom, atom.dual()):
        found = table.find(label)
        if not found:
            raise AtomNotFoundError(f"{label} does not occur in {derivation.conclusion}")
        if len(found) > 1:
            raise AmbiguousOccurrenceError(f"{label} occurs {len(found)} times in {derivation.conclusion}")
    erased = {atom, atom.dual()}
    conclusion = erase_atoms(derivation.conclusion, erased)
    state = conclusion
    steps: list[Step] = []
    for step in derivation.steps:
        if step.rule is RuleName.AXIOM:
            steps.append(axiom())
            continue
        premise = erase_atoms(step.premise, erased)
        if premise == state:
            logger.debug("dropping %s, trivial once %s is erased", step.rule.symbol, atom)
            continue
        instance = step.instance
        steps.append(
            Step(
                locate_step(
                    instance.rule,
                    state,
                    erase_atoms(instance.redex, erased),
                    erase_atoms(instance.contractum, erased),
                    premise,
                ),
                premise,
            )
        )
        state = premise
    return Derivation(conclusion, tuple(steps))
