"""Certifying derivations for the alpha-structures, built without search."""

from __future__ import annotations

from bvkit.structure import (
    HOLE,
    UNIT,
    Atom,
    AtomNode,
    Kind,
    PositionedContext,
    Structure,
    find_hole,
    make,
)
from bvkit.prover import Derivation, RuleName, Step, lift, locate_step
from bvkit.counterexample._alpha import AlphaParams, alpha, s_n

__all__ = ["alpha_derivation", "proof_of_sn"]


def _par(*parts: Structure) -> Structure:
    return make(Kind.PAR, parts)


def _seq(*parts: Structure) -> Structure:
    return make(Kind.SEQ, parts)


def _base_derivation(p: AlphaParams) -> Derivation:
    u, r, t = p.u, p.r, p.t
    a, b, c = (AtomNode(Atom(n, False, u)) for n in "abc")
    na, nb, nc = (AtomNode(Atom(n, True, u)) for n in "abc")
    b_r = _par(b, r)
    conclusion = alpha(AlphaParams(0, u, r, t)).structure
    state = conclusion

    def step(rule: RuleName, redex: Structure, contractum: Structure, premise: Structure) -> None:
        nonlocal state
        steps.append(Step(locate_step(rule, state, redex, contractum, premise), premise))
        state = premise

    steps: list[Step] = []
    # [a,b,R] -> <a;[b,R]>
    q1 = _seq(a, b_r)
    step(RuleName.Q_DOWN, _par(a, b, r), q1, _par(_seq(q1, c), _seq(na, _par(nb, nc, t))))
    # the two seqs merge around [a,~a]
    q2 = _seq(_par(a, na), _par(_seq(b_r, c), nb, nc, t))
    step(RuleName.Q_DOWN, state, q2, q2)
    rest = _par(_seq(b_r, c), nb, nc, t)
    step(RuleName.AI_DOWN, _par(a, na), UNIT, rest)
    q4 = _seq(_par(b_r, nb, t), c)
    step(RuleName.Q_DOWN, _par(_seq(b_r, c), nb, t), q4, _par(q4, nc))
    q5 = _seq(_par(b, nb, r, t), _par(c, nc))
    step(RuleName.Q_DOWN, state, q5, q5)
    step(RuleName.AI_DOWN, _par(c, nc), UNIT, _par(b, nb, r, t))
    step(RuleName.AI_DOWN, _par(b, nb), UNIT, _par(r, t))
    return Derivation(conclusion, tuple(steps))


def _hole_context(root: Structure) -> PositionedContext:
    return PositionedContext(root, find_hole(root))


def alpha_derivation(p: AlphaParams) -> Derivation:
    """Derivation of ``alpha_n(u, R, T)`` from ``[R, T]``.

    The base case rewrites ``[R, T]`` into ``alpha_0``. For ``n > 0`` the
    derivation of ``alpha_0(u, R, T)`` is topped by the derivation of the
    right nested structure, lifted next to ``~a_u``, and then by the
    derivation of the left one, lifted next to ``c_u``; read bottom-up,
    the left one comes first.
    """
    if p.n == 0:
        return _base_derivation(p)
    left, right = p.children()
    u = p.u
    a, b, c = (AtomNode(Atom(n, False, u)) for n in "abc")
    na = AtomNode(Atom("a", True, u))
    nested_left = alpha(left).structure
    nested_right = alpha(right).structure

    around_left = _hole_context(_par(_seq(HOLE, c), _seq(na, nested_right)))
    around_right = _hole_context(_par(_seq(_par(a, b, p.r), c), _seq(na, HOLE)))

    upper = lift(alpha_derivation(left), around_left)
    middle = lift(alpha_derivation(right), around_right)
    base = _base_derivation(AlphaParams(0, u, p.r, p.t))
    return upper.compose(middle).compose(base)


def proof_of_sn(n: int) -> Derivation:
    """Proof of ``S_n``: its alpha-derivation closed by the axiom."""
    return alpha_derivation(s_n(n).params).closed()
