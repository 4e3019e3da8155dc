"""Checking derivations in system BV or SBV."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from bvkit.structure import UNIT, AtomNode, Kind, Structure, make, replace_at
from bvkit.prover._derivation import Derivation
from bvkit.prover._locate import unit_insertions
from bvkit.prover._rules import BV_RULES, SBV_RULES, RuleInstance, RuleName, seq_splits

__all__ = ["System", "CheckReport", "check", "is_instance_shape"]


class System(str, Enum):
    BV = "bv"
    SBV = "sbv"

    @property
    def rules(self) -> frozenset[RuleName]:
        return BV_RULES if self is System.BV else SBV_RULES


@dataclass(frozen=True)
class CheckReport:
    """Outcome of `check`; `step` and `reason` describe the first failure."""

    ok: bool
    step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _splits(items: tuple[Structure, ...], *, empty_left: bool) -> Iterator[tuple[tuple[Structure, ...], tuple[Structure, ...]]]:
    indices = range(len(items))
    for size in range(0 if empty_left else 1, len(items) + 1):
        for chosen in combinations(indices, size):
            left = tuple(items[i] for i in chosen)
            right = tuple(items[i] for i in indices if i not in chosen)
            yield left, right


def _ai_down_shape(redex: Structure, contractum: Structure) -> bool:
    if contractum != UNIT or redex.kind is not Kind.PAR or len(redex.children) != 2:
        return False
    left, right = redex.children
    return (
        isinstance(left, AtomNode)
        and isinstance(right, AtomNode)
        and left.atom.dual() == right.atom
    )


def _switch_shape(redex: Structure, contractum: Structure) -> bool:
    if redex.kind is not Kind.PAR:
        return False
    children = redex.children
    for u, chosen in enumerate(children):
        t = make(Kind.PAR, children[:u] + children[u + 1 :])
        parts = chosen.children if chosen.kind is Kind.COPAR else (chosen,)
        for r, r_prime in _splits(parts, empty_left=True):
            if not r_prime:
                continue
            candidate = make(
                Kind.COPAR,
                (make(Kind.PAR, (make(Kind.COPAR, r), t)), make(Kind.COPAR, r_prime)),
            )
            if candidate == contractum:
                return True
    return False


def _q_down_shape(redex: Structure, contractum: Structure) -> bool:
    if redex.kind is not Kind.PAR:
        return False
    children = redex.children
    first, rest = children[0], children[1:]
    for extra, others in _splits(rest, empty_left=True):
        if not others:
            continue
        u = make(Kind.PAR, (first, *extra))
        v = make(Kind.PAR, others)
        for r, r_prime in seq_splits(u):
            for t, t_prime in seq_splits(v):
                candidate = make(Kind.SEQ, (make(Kind.PAR, (r, t)), make(Kind.PAR, (r_prime, t_prime))))
                if candidate == contractum:
                    return True
    return False


def _q_up_shape(redex: Structure, contractum: Structure) -> bool:
    if redex.kind is not Kind.SEQ:
        return False
    children = redex.children
    for cut in range(1, len(children)):
        left = make(Kind.SEQ, children[:cut])
        right = make(Kind.SEQ, children[cut:])
        left_parts = left.children if left.kind is Kind.COPAR else (left,)
        right_parts = right.children if right.kind is Kind.COPAR else (right,)
        for r, t in _splits(left_parts, empty_left=True):
            for r_prime, t_prime in _splits(right_parts, empty_left=True):
                candidate = make(
                    Kind.COPAR,
                    (
                        make(Kind.SEQ, (make(Kind.COPAR, r), make(Kind.COPAR, r_prime))),
                        make(Kind.SEQ, (make(Kind.COPAR, t), make(Kind.COPAR, t_prime))),
                    ),
                )
                if candidate == contractum:
                    return True
    return False


def _ai_up_contractum(contractum: Structure) -> bool:
    if contractum.kind is not Kind.COPAR or len(contractum.children) != 2:
        return False
    left, right = contractum.children
    return isinstance(left, AtomNode) and isinstance(right, AtomNode) and left.atom.dual() == right.atom


_SHAPES = {
    RuleName.AI_DOWN: _ai_down_shape,
    RuleName.SWITCH: _switch_shape,
    RuleName.Q_DOWN: _q_down_shape,
    RuleName.Q_UP: _q_up_shape,
}


def is_instance_shape(rule: RuleName, redex: Structure, contractum: Structure) -> bool:
    """Whether *redex* / *contractum* is an instance of *rule* modulo equations."""
    if rule is RuleName.AXIOM:
        return redex == UNIT and contractum == UNIT
    if rule is RuleName.AI_UP:
        return redex == UNIT and _ai_up_contractum(contractum)
    return _SHAPES[rule](redex, contractum)


def _check_step(instance: RuleInstance, state: Structure, premise: Structure, last: bool) -> str | None:
    rule = instance.rule
    if rule is RuleName.AXIOM:
        if not last:
            return "the axiom must be the topmost step"
        if state != UNIT or premise != UNIT:
            return "the axiom only proves the unit"
        return None
    context = instance.context
    if context.root != state:
        return "the context does not lie in the conclusion of the step"
    if not is_instance_shape(rule, instance.redex, instance.contractum):
        return f"{instance.redex} -> {instance.contractum} is not an instance of {rule.symbol}"
    if rule is RuleName.AI_UP:
        node = context.node
        allowed = [replace_at(state, context.path, c) for c in unit_insertions(node, instance.contractum)]
        if state == UNIT:
            allowed.append(instance.contractum)
        if premise not in allowed:
            return "premise does not insert the contractum at the position"
    else:
        if context.substructure != instance.redex:
            return f"the redex {instance.redex} is not at the stated position"
        if context.plug(instance.contractum) != premise:
            return "premise mismatch"
    if premise == state and not instance.trivial:
        return "trivial instance"
    return None


def check(derivation: Derivation, system: System | str = System.BV) -> CheckReport:
    """Validate every step of *derivation* in *system*.

    Each step must be a well-shaped instance of a rule of the system whose
    redex sits at its position in the structure below, and whose premise
    is that structure with the contractum in place of the redex.

    Returns
    -------
    CheckReport
        ``ok`` or the index of the first failing step with the reason.
    """
    system = System(system)
    state = derivation.conclusion
    steps = derivation.steps
    for k, step in enumerate(steps):
        if step.rule not in system.rules:
            return CheckReport(False, k, f"rule {step.rule.symbol} is not in {system.name}")
        reason = _check_step(step.instance, state, step.premise, k == len(steps) - 1)
        if reason is not None:
            return CheckReport(False, k, reason)
        state = step.premise
    return CheckReport(True)
