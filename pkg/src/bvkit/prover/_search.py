"""Memoized bottom-up proof search for BV."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from psygnal import Signal

from bvkit.exceptions import BudgetExceededError
from bvkit.log import Loggable
from bvkit.structure import UNIT, Structure
from bvkit.prover._derivation import Derivation, Step, axiom
from bvkit.prover._rules import RuleInstance, expand

__all__ = ["DEFAULT_BUDGET", "ProofStatus", "ProofResult", "ProofSearch", "prove", "is_provable"]

DEFAULT_BUDGET = 10**6
"""Default number of structures a single query may explore."""


class ProofStatus(str, Enum):
    PROVED = "proved"
    UNPROVABLE = "unprovable"


@dataclass(frozen=True)
class ProofResult:
    status: ProofStatus
    proof: Derivation | None
    explored: int

    @property
    def provable(self) -> bool:
        return self.status is ProofStatus.PROVED

    def __bool__(self) -> bool:
        return self.provable


@dataclass
class _Frame:
    node: Structure
    successors: Iterator[tuple[RuleInstance, Structure]]
    current: tuple[RuleInstance, Structure] | None = field(default=None)


class ProofSearch(Loggable):
    """Depth-first proof search with a memo shared across queries.

    Provability is decided by exploring premises bottom-up. The rules
    applied by `expand` never grow the multiset of atoms, so the premises
    reachable from a goal are finitely many; strongly connected groups of
    structures whose every premise fails are recorded as unprovable as a
    whole, which makes the search a decision procedure.

    Parameters
    ----------
    budget : int
        Maximum number of structures a single query may explore.
    progress_every : int
        Emit `sigProgress` each time this many structures were explored.
    name : str
        Identifier used in log records.

    Attributes
    ----------
    sigProgress : Signal(int)
        Number of structures explored so far by the running query.
    """

    sigProgress = Signal(int)

    def __init__(
        self,
        budget: int = DEFAULT_BUDGET,
        progress_every: int = 10_000,
        name: str = "prover",
    ) -> None:
        self.budget = budget
        self.progress_every = max(progress_every, 1)
        self.name = name
        self._proved: dict[Structure, tuple[RuleInstance, Structure] | None] = {UNIT: None}
        self._disproved: set[Structure] = set()
        self.explored = 0

    @property
    def memo_size(self) -> int:
        return len(self._proved) + len(self._disproved)

    def clear(self) -> None:
        self._proved = {UNIT: None}
        self._disproved.clear()

    def is_provable(self, goal: Structure) -> bool:
        """Decide provability of *goal*.

        Raises
        ------
        BudgetExceededError
            If the query explores more than `budget` structures.
        """
        return self._search(goal)

    def prove(self, goal: Structure) -> ProofResult:
        """Search a proof of *goal*."""
        provable = self._search(goal)
        if not provable:
            self.logger.debug("%s is unprovable (%d explored)", goal, self.explored)
            return ProofResult(ProofStatus.UNPROVABLE, None, self.explored)
        proof = self.proof_of(goal)
        self.logger.debug("%s proved in %d steps (%d explored)", goal, proof.length, self.explored)
        return ProofResult(ProofStatus.PROVED, proof, self.explored)

    def proof_of(self, goal: Structure) -> Derivation:
        """Read the proof of an already proved *goal* from the memo."""
        steps: list[Step] = []
        state = goal
        while state != UNIT:
            instance, premise = self._proved[state]  # type: ignore[misc]
            steps.append(Step(instance, premise))
            state = premise
        steps.append(axiom())
        return Derivation(goal, tuple(steps))

    def _tick(self) -> None:
        self.explored += 1
        if self.explored > self.budget:
            self.logger.warning("budget of %d structures exceeded", self.budget)
            raise BudgetExceededError(self.explored)
        if self.explored % self.progress_every == 0:
            self.sigProgress.emit(self.explored)

    def _search(self, goal: Structure) -> bool:
        self.explored = 0
        if goal in self._proved:
            return True
        if goal in self._disproved:
            return False
        index: dict[Structure, int] = {}
        lowlink: dict[Structure, int] = {}
        stack: list[Structure] = []
        on_stack: set[Structure] = set()
        frames: list[_Frame] = []

        def enter(node: Structure) -> None:
            self._tick()
            index[node] = lowlink[node] = len(index)
            stack.append(node)
            on_stack.add(node)
            frames.append(_Frame(node, iter(expand(node))))

        enter(goal)
        while frames:
            frame = frames[-1]
            descended = False
            for instance, premise in frame.successors:
                if premise in self._proved:
                    frame.current = (instance, premise)
                    for f in frames:
                        self._proved[f.node] = f.current
                    return True
                if premise in self._disproved:
                    continue
                if premise in index:
                    if premise in on_stack:
                        lowlink[frame.node] = min(lowlink[frame.node], index[premise])
                    continue
                frame.current = (instance, premise)
                enter(premise)
                descended = True
                break
            if descended:
                continue
            frames.pop()
            node = frame.node
            if lowlink[node] == index[node]:
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    self._disproved.add(member)
                    if member == node:
                        break
            if frames:
                parent = frames[-1].node
                lowlink[parent] = min(lowlink[parent], lowlink[node])
        return False


def prove(goal: Structure, budget: int = DEFAULT_BUDGET) -> ProofResult:
    """Decide *goal* with a fresh `ProofSearch`; see `ProofSearch.prove`."""
    return ProofSearch(budget).prove(goal)


def is_provable(goal: Structure, budget: int = DEFAULT_BUDGET) -> bool:
    return ProofSearch(budget).is_provable(goal)
