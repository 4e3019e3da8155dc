"""JSON form of derivations."""

from __future__ import annotations

import json
import logging
from typing import Any

from bvkit.exceptions import BVError, DerivationFormatError, InstanceError
from bvkit.structure import PositionedContext, Structure, parse, subterm_at, to_text
from bvkit.prover._derivation import Derivation, Step
from bvkit.prover._locate import groupings_of, locate_step
from bvkit.prover._rules import RuleInstance, RuleName

__all__ = ["derivation_to_dict", "derivation_from_dict", "dump_derivation", "load_derivation"]

logger = logging.getLogger("bvkit")


def derivation_to_dict(derivation: Derivation) -> dict[str, Any]:
    steps = []
    for step in derivation.steps:
        instance = step.instance
        entry: dict[str, Any] = {
            "rule": instance.rule.value,
            "path": list(instance.context.path),
            "redex": to_text(instance.redex),
            "contractum": to_text(instance.contractum),
            "premise": to_text(step.premise),
        }
        if instance.context.group:
            entry["group"] = list(instance.context.group)
        if instance.trivial:
            entry["trivial"] = True
        steps.append(entry)
    return {"conclusion": to_text(derivation.conclusion), "steps": steps}


def _parse(text: Any, what: str, step: int | None) -> Structure:
    if not isinstance(text, str):
        raise DerivationFormatError(f"{what} must be a string", step)
    try:
        return parse(text)
    except BVError as exc:
        raise DerivationFormatError(f"{what}: {exc}", step) from exc


def _place(
    k: int,
    rule: RuleName,
    state: Structure,
    path: tuple[int, ...],
    group: tuple[int, ...] | None,
    redex: Structure,
    contractum: Structure,
    premise: Structure,
    trivial: bool,
) -> RuleInstance:
    try:
        node = subterm_at(state, path)
        if rule is RuleName.AI_UP or rule is RuleName.AXIOM:
            return RuleInstance(rule, PositionedContext(state, path), redex, contractum, trivial=trivial)
        if group is None:
            group = next(groupings_of(node, redex), None)
        if group is not None:
            return RuleInstance(rule, PositionedContext(state, path, group), redex, contractum, trivial=trivial)
    except ValueError:
        pass
    try:
        instance = locate_step(rule, state, redex, contractum, premise, trivial=trivial)
    except InstanceError:
        # left for the checker to reject
        return RuleInstance(rule, PositionedContext(state), redex, contractum, trivial=trivial)
    logger.warning("step %d: redex is not at path %s, found at %s", k, list(path), list(instance.context.path))
    return instance


def derivation_from_dict(data: Any) -> Derivation:
    """Build a derivation from its JSON object.

    The position of each step is given by its ``path`` and optional
    ``group``; without a group the children making up the redex are
    looked up in the node at ``path``.

    Raises
    ------
    DerivationFormatError
        If the object does not have the expected shape or a structure
        does not parse.
    """
    if not isinstance(data, dict) or "conclusion" not in data or not isinstance(data.get("steps"), list):
        raise DerivationFormatError("expected an object with 'conclusion' and 'steps'")
    conclusion = _parse(data["conclusion"], "conclusion", None)
    state = conclusion
    steps: list[Step] = []
    for k, entry in enumerate(data["steps"]):
        if not isinstance(entry, dict):
            raise DerivationFormatError("step must be an object", k)
        try:
            rule = RuleName(entry.get("rule"))
        except ValueError as exc:
            raise DerivationFormatError(f"unknown rule {entry.get('rule')!r}", k) from exc
        path = entry.get("path", [])
        group = entry.get("group")
        if not isinstance(path, list) or not all(isinstance(i, int) for i in path):
            raise DerivationFormatError("path must be a list of integers", k)
        if group is not None and (not isinstance(group, list) or not all(isinstance(i, int) for i in group)):
            raise DerivationFormatError("group must be a list of integers", k)
        redex = _parse(entry.get("redex"), "redex", k)
        contractum = _parse(entry.get("contractum"), "contractum", k)
        premise = _parse(entry.get("premise"), "premise", k)
        instance = _place(
            k,
            rule,
            state,
            tuple(path),
            tuple(group) if group is not None else None,
            redex,
            contractum,
            premise,
            bool(entry.get("trivial", False)),
        )
        steps.append(Step(instance, premise))
        state = premise
    return Derivation(conclusion, tuple(steps))


def dump_derivation(derivation: Derivation, **kwargs: Any) -> str:
    return json.dumps(derivation_to_dict(derivation), **kwargs)


def load_derivation(text: str) -> Derivation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DerivationFormatError(f"invalid JSON: {exc}") from exc
    return derivation_from_dict(data)
