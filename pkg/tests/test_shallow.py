import random

import pytest

from bvkit.exceptions import (
    BadMatchingError,
    EqualStructuresError,
    InstanceError,
    NotShallowError,
    OccMismatchError,
)
from bvkit.prover import RuleName, is_instance_shape
from bvkit.shallow import (
    CATALOG,
    RuleScheme,
    ShallowSystem,
    allowed,
    check_deep_preservation,
    instantiate,
    is_interaction,
    prec_order,
    prec_violations,
    system_depth,
    validate_shallow_rule,
)
from _structures import random_structure
from bvkit.structure import Variable, atom, leaves, parse, parse_scheme
from bvkit.web import Relation


@pytest.mark.parametrize(
    "name, depth",
    [("switch", 2), ("q_down", 2), ("deep_example", 3), ("mix", 1)],
)
def test_catalog_rules_are_shallow(name: str, depth: int) -> None:
    verdict = validate_shallow_rule(CATALOG[name])
    assert verdict.is_shallow, verdict.reasons
    assert verdict.depth == depth
    assert verdict.reasons == ()


def test_atomic_interaction_is_not_shallow() -> None:
    verdict = validate_shallow_rule(CATALOG["ai_down"])
    assert not verdict
    assert verdict.reasons == ("the premise is the unit", "the conclusion repeats variable ?x")
    assert is_interaction(CATALOG["ai_down"])
    assert not is_interaction(CATALOG["mix"])
    assert not is_interaction(RuleScheme.from_text("r", "[A,~A]", "o"))


@pytest.mark.parametrize(
    "conclusion, premise, reason",
    [
        ("[A,A]", "(A,A)", "repeats variable A"),
        ("[A,B]", "(A,C)", "do not have the same occurrences"),
        ("[A,B]", "[B,A]", "premise and conclusion are equal"),
        ("[(A,B),C]", "[A,(B,C)]", "is not allowed"),
    ],
)
def test_rejected_rules(conclusion: str, premise: str, reason: str) -> None:
    verdict = validate_shallow_rule(RuleScheme.from_text("r", conclusion, premise))
    assert not verdict.is_shallow
    assert any(reason in r for r in verdict.reasons)


def test_system_depth() -> None:
    rules = [CATALOG[name] for name in ("switch", "q_down", "deep_example", "mix")]
    assert system_depth(rules) == 3
    assert ShallowSystem(rules[:2]).depth == 2
    assert system_depth([]) == 0
    assert system_depth([*rules, CATALOG["ai_down"]]) == 3
    assert system_depth([CATALOG["ai_down"]]) == 0
    with pytest.raises(NotShallowError) as info:
        system_depth([*rules, RuleScheme.from_text("assoc", "[(A,B),C]", "[A,(B,C)]")])
    assert info.value.rule == "assoc"


def test_prec_order() -> None:
    assert allowed(Relation.PAR) == {Relation.PAR}
    assert allowed(Relation.COPAR) == set(Relation)
    assert prec_order(parse("[a,b]"), parse("(a,b)"))
    assert prec_order(parse("[a,b]"), parse("<a;b>"))
    assert not prec_order(parse("(a,b)"), parse("[a,b]"))
    assert not prec_order(parse("<b;a>"), parse("<a;b>"))
    (violation,) = prec_violations(parse("<b;a>"), parse("<a;b>"))
    assert violation.weaker is Relation.SEQ
    assert violation.stronger is Relation.COSEQ


def test_prec_order_errors() -> None:
    with pytest.raises(OccMismatchError):
        prec_violations(parse("[a,b]"), parse("[a,c]"))
    with pytest.raises(OccMismatchError):
        prec_violations(parse("[a,a]"), parse("(a,a)"))
    with pytest.raises(EqualStructuresError):
        prec_violations(parse("[a,b]"), parse("[b,a]"))


def test_instantiate() -> None:
    """Instances of the switch scheme are switch instances of the prover."""
    conclusion, premise = CATALOG["switch"].instantiate(
        {"A": parse("a"), "B": parse("[b,c]"), "C": parse("~a")}
    )
    assert conclusion == parse("[(a,[b,c]),~a]")
    assert premise == parse("([a,~a],[b,c])")
    assert is_instance_shape(RuleName.SWITCH, conclusion, premise)
    assert instantiate(parse_scheme("[?x,~?x]"), {"x": parse("<a;b>")}) == parse("[<a;b>,<~a;~b>]")
    with pytest.raises(InstanceError):
        instantiate(parse_scheme("[A,B]"), {"A": parse("a")})


def test_deep_preservation() -> None:
    conclusion = parse("<d;[(a,b),c]>")
    premise = parse("<d;([a,c],b)>")
    witness = check_deep_preservation(conclusion, premise, 0)
    assert witness is not None
    assert witness.depth > 0
    assert witness.change.before is Relation.PAR
    assert witness.change.after is Relation.COPAR
    assert check_deep_preservation(conclusion, premise, 1) is None
    assert check_deep_preservation(parse("[(a,b),c]"), parse("([a,c],b)"), 2) is None


def test_deep_preservation_matching() -> None:
    conclusion, premise = parse("[a,b]"), parse("(a,b)")
    with pytest.raises(BadMatchingError):
        check_deep_preservation(conclusion, premise, 0, {0: 0})
    witness = check_deep_preservation(conclusion, premise, 0, {0: 1, 1: 0})
    assert witness is None


@pytest.mark.parametrize("name", ["switch", "q_down", "deep_example", "mix"])
def test_instances_keep_deep_relations(name: str) -> None:
    """Instances of a shallow rule keep every relation below its depth."""
    rule = CATALOG[name]
    depth = validate_shallow_rule(rule).depth
    names = sorted({leaf.name for leaf in leaves(rule.conclusion) if isinstance(leaf, Variable)})
    rng = random.Random(name)
    for _ in range(250):
        fresh = iter(range(100))
        substitution = {
            v: random_structure(rng, [atom(f"p{next(fresh)}") for _ in range(rng.randint(1, 3))]) for v in names
        }
        conclusion, premise = rule.instantiate(substitution)
        assert check_deep_preservation(conclusion, premise, depth) is None, str(conclusion)
