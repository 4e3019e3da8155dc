"""Derivations: bottom-up chains of rule instances."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from bvkit.structure import UNIT, PositionedContext, Structure
from bvkit.prover._rules import RuleInstance, RuleName

__all__ = ["Step", "Derivation", "axiom"]


@dataclass(frozen=True)
class Step:
    """One rule instance and the premise it leaves above."""

    instance: RuleInstance
    premise: Structure

    @property
    def rule(self) -> RuleName:
        return self.instance.rule


def axiom() -> Step:
    """The axiom step closing a proof at the unit."""
    return Step(RuleInstance(RuleName.AXIOM, PositionedContext(UNIT), UNIT, UNIT), UNIT)


@dataclass(frozen=True)
class Derivation:
    """A derivation read bottom-up.

    ``steps[0]`` rewrites `conclusion`, every later step rewrites the
    premise of the step before it.
    """

    conclusion: Structure
    steps: tuple[Step, ...] = field(default=())

    def __post_init__(self) -> None:
        if not isinstance(self.steps, tuple):
            object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def top(self) -> Structure:
        """The topmost structure (the premise of the last step)."""
        return self.steps[-1].premise if self.steps else self.conclusion

    @property
    def is_proof(self) -> bool:
        return (
            bool(self.steps)
            and self.steps[-1].rule is RuleName.AXIOM
            and self.top == UNIT
        )

    @property
    def length(self) -> int:
        """Number of rule instances, the axiom included."""
        return len(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def states(self) -> list[Structure]:
        """Conclusion followed by the premise of every step."""
        return [self.conclusion, *(s.premise for s in self.steps)]

    def compose(self, upper: Derivation) -> Derivation:
        """Stack *upper* on top of this derivation.

        Raises
        ------
        ValueError
            If the top of this derivation is not the conclusion of *upper*,
            or this derivation is already closed by the axiom.
        """
        if self.steps and self.steps[-1].rule is RuleName.AXIOM:
            raise ValueError("cannot compose above a proof")
        if self.top != upper.conclusion:
            raise ValueError(f"top {self.top} does not match conclusion {upper.conclusion}")
        return Derivation(self.conclusion, self.steps + upper.steps)

    def closed(self) -> Derivation:
        """This derivation topped by the axiom; its top must be the unit."""
        return self.compose(Derivation(UNIT, (axiom(),)))

    def rule_counts(self) -> dict[RuleName, int]:
        counts: dict[RuleName, int] = {}
        for step in self.steps:
            counts[step.rule] = counts.get(step.rule, 0) + 1
        return counts

    def render(self) -> str:
        """Plain text listing, conclusion at the bottom."""
        out = []
        states = self.states()
        for k in range(len(self.steps), 0, -1):
            step = self.steps[k - 1]
            out.append(f"{states[k]}")
            out.append(f"---- {step.rule.symbol}")
        out.append(str(self.conclusion))
        return "\n".join(out)

