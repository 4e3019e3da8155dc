"""Rule schemes, shallowness and the depth of shallow systems."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from bvkit.exceptions import EqualStructuresError, InstanceError, NotShallowError, OccMismatchError
from bvkit.structure import (
    UNIT,
    Kind,
    Structure,
    Variable,
    VarNode,
    depth_of_structure,
    leaves,
    make,
    negate,
    parse_scheme,
)
from bvkit.shallow._order import prec_violations

__all__ = [
    "RuleScheme",
    "ShallowVerdict",
    "validate_shallow_rule",
    "ShallowSystem",
    "system_depth",
    "is_interaction",
    "instantiate",
    "CATALOG",
]


@dataclass(frozen=True)
class RuleScheme:
    """A rule given by a premise scheme above a conclusion scheme."""

    name: str
    premise: Structure
    conclusion: Structure

    @classmethod
    def from_text(cls, name: str, conclusion: str, premise: str) -> RuleScheme:
        return cls(name, parse_scheme(premise), parse_scheme(conclusion))

    def instantiate(self, substitution: Mapping[str, Structure]) -> tuple[Structure, Structure]:
        """Conclusion and premise under *substitution*."""
        return instantiate(self.conclusion, substitution), instantiate(self.premise, substitution)


@dataclass(frozen=True)
class ShallowVerdict:
    is_shallow: bool
    depth: int
    reasons: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.is_shallow


def _repeated_variables(s: Structure) -> list[str]:
    counts = Counter(leaf.positive for leaf in leaves(s) if isinstance(leaf, Variable))
    return sorted(v.label for v, k in counts.items() if k > 1)


def validate_shallow_rule(rule: RuleScheme) -> ShallowVerdict:
    """Decide whether *rule* is shallow and compute its depth.

    A rule is shallow when premise and conclusion are not the unit, use
    the same occurrences, repeat no variable, and the conclusion is below
    the premise in the order of `prec_order`. The depth is the greater
    depth of the two sides.

    A variable and its negation count as the same variable, so
    ``[?x,~?x]`` repeats ``?x``.
    """
    reasons: list[str] = []
    depth = max(depth_of_structure(rule.premise), depth_of_structure(rule.conclusion))
    if rule.premise == UNIT:
        reasons.append("the premise is the unit")
    if rule.conclusion == UNIT:
        reasons.append("the conclusion is the unit")
    for side, s in (("premise", rule.premise), ("conclusion", rule.conclusion)):
        for name in _repeated_variables(s):
            reasons.append(f"the {side} repeats variable {name}")
    if not reasons:
        try:
            for violation in prec_violations(rule.conclusion, rule.premise):
                reasons.append(str(violation))
        except OccMismatchError as exc:
            reasons.append(str(exc))
        except EqualStructuresError:
            reasons.append("premise and conclusion are equal")
    return ShallowVerdict(not reasons, depth, tuple(reasons))


@dataclass
class ShallowSystem:
    rules: list[RuleScheme] = field(default_factory=list)

    def __iter__(self) -> Iterator[RuleScheme]:
        return iter(self.rules)

    @property
    def depth(self) -> int:
        return system_depth(self)


def is_interaction(rule: RuleScheme) -> bool:
    """Whether *rule* is atomic interaction: ``[?x,~?x]`` above the unit."""
    if rule.premise != UNIT or len(rule.conclusion.children) != 2:
        return False
    first, second = (getattr(c, "leaf", None) for c in rule.conclusion.children)
    return (
        rule.conclusion.kind is Kind.PAR
        and isinstance(first, Variable)
        and first.atomic
        and first.dual() == second
    )


def system_depth(system: ShallowSystem | Iterable[RuleScheme]) -> int:
    """Greatest depth of the rules of a shallow system; 0 when it has none.

    Atomic interaction may belong to a shallow system; it is skipped.

    Raises
    ------
    NotShallowError
        Naming the first rule that is not shallow.
    """
    rules = system.rules if isinstance(system, ShallowSystem) else list(system)
    depth = 0
    for rule in rules:
        if is_interaction(rule):
            continue
        verdict = validate_shallow_rule(rule)
        if not verdict:
            raise NotShallowError(rule.name)
        depth = max(depth, verdict.depth)
    return depth


def instantiate(scheme: Structure, substitution: Mapping[str, Structure]) -> Structure:
    """Replace the variables of *scheme* by structures.

    Negated variables receive the negation of their value.

    Raises
    ------
    InstanceError
        If a variable has no value.
    """
    if isinstance(scheme, VarNode):
        variable = scheme.variable
        if variable.name not in substitution:
            raise InstanceError(f"no value for variable {variable.name}")
        value = substitution[variable.name]
        return negate(value) if variable.negated else value
    if not scheme.children:
        return scheme
    return make(scheme.kind, [instantiate(c, substitution) for c in scheme.children])


CATALOG: dict[str, RuleScheme] = {
    rule.name: rule
    for rule in (
        RuleScheme.from_text("switch", "[(A,B),C]", "([A,C],B)"),
        RuleScheme.from_text("q_down", "[<A;B>,<C;D>]", "<[A,C];[B,D]>"),
        RuleScheme.from_text("deep_example", "[A,B,(C,C')]", "[A,([B,C],C')]"),
        RuleScheme.from_text("mix", "[A,A']", "(A,A')"),
        RuleScheme.from_text("ai_down", "[?x,~?x]", "o"),
    )
}
"""Standard schemes: switch, q↓, a shallow rule of depth 3, mix and atomic interaction."""
