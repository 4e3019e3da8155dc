"""Provable structures over few atoms, generated top-down from the unit.

Each move applies a BV rule from premise to conclusion at every position,
groupings included. Closing the unit under the moves, up to a bound on
the number of atom occurrences, yields exactly the provable structures
of that size.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Sequence
from itertools import chain, combinations

from bvkit.structure import UNIT, Kind, Structure, atom, leaves, make, positions

_PAIR_NAMES = ("a", "b")


def _parts(s: Structure, kind: Kind) -> tuple[Structure, ...]:
    if s == UNIT:
        return ()
    return s.children if s.kind is kind else (s,)


def _splits(items: Sequence[Structure]) -> Iterator[tuple[list[Structure], list[Structure]]]:
    indices = range(len(items))
    for size in range(len(items) + 1):
        for chosen in combinations(indices, size):
            yield [items[i] for i in chosen], [items[i] for i in indices if i not in chosen]


def _insertions(s: Structure, max_atoms: int) -> Iterator[Structure]:
    if len(leaves(s)) + 2 > max_atoms:
        return
    for name in _PAIR_NAMES:
        pair = make(Kind.PAR, (atom(name), atom(name, negated=True)))
        if s == UNIT:
            yield pair
            continue
        for context in positions(s):
            node = context.substructure
            for filled in (
                make(Kind.PAR, (node, pair)),
                make(Kind.COPAR, (node, pair)),
                make(Kind.SEQ, (node, pair)),
                make(Kind.SEQ, (pair, node)),
            ):
                yield context.plug(filled)


def _switches(s: Structure) -> Iterator[Structure]:
    # ([R,T],U) above [(R,U),T]
    for context in positions(s):
        node = context.substructure
        if node.kind is not Kind.COPAR:
            continue
        children = node.children
        for k, chosen in enumerate(children):
            u = make(Kind.COPAR, children[:k] + children[k + 1 :])
            for r, t in _splits(_parts(chosen, Kind.PAR)):
                if not t:
                    continue
                yield context.plug(
                    make(Kind.PAR, (make(Kind.COPAR, (make(Kind.PAR, r), u)), make(Kind.PAR, t)))
                )


def _seq_merges(s: Structure) -> Iterator[Structure]:
    # <[R,T];[R',T']> above [<R;R'>,<T;T'>]
    for context in positions(s):
        node = context.substructure
        if node.kind is not Kind.SEQ:
            continue
        children = node.children
        for cut in range(1, len(children)):
            first = make(Kind.SEQ, children[:cut])
            second = make(Kind.SEQ, children[cut:])
            for r, t in _splits(_parts(first, Kind.PAR)):
                for r2, t2 in _splits(_parts(second, Kind.PAR)):
                    yield context.plug(
                        make(
                            Kind.PAR,
                            (
                                make(Kind.SEQ, (make(Kind.PAR, r), make(Kind.PAR, r2))),
                                make(Kind.SEQ, (make(Kind.PAR, t), make(Kind.PAR, t2))),
                            ),
                        )
                    )


def provable_structures(max_atoms: int = 4) -> set[Structure]:
    """Every provable structure over ``a``, ``b`` and their duals with at most *max_atoms* occurrences."""
    seen = {UNIT}
    queue = deque([UNIT])
    while queue:
        premise = queue.popleft()
        moves = chain(_insertions(premise, max_atoms), _switches(premise), _seq_merges(premise))
        for conclusion in moves:
            if conclusion not in seen:
                seen.add(conclusion)
                queue.append(conclusion)
    return seen
