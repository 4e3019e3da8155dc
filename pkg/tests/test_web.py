import json
import random
from itertools import product
from pathlib import Path

import pytest

from _structures import random_atoms, random_structure, shuffled
from bvkit.exceptions import BadMatchingError, DuplicateAtomsError, NotAWebError, WebError
from bvkit.structure import Atom, Kind, OccurrenceTable, atom, make, parse, positions, to_text
from bvkit.web import (
    Relation,
    Violation,
    WebCandidate,
    WebProperty,
    check_inverse_square,
    dump_web,
    forbidden_configs,
    load_web,
    match_by_label,
    reconstruct,
    relation_diff,
    same_web,
    verify_web_properties,
    web_from_dict,
    web_of,
    web_to_dict,
    web_to_dot,
)

EXAMPLE = "[([a,b],c),<d;[e,f]>]"


def relation_of(web: WebCandidate, left: str, right: str) -> Relation:
    where = {str(label): i for i, label in enumerate(web.labels)}
    return web.relation(where[left], where[right])


def test_web_of_example() -> None:
    web = web_of(parse(EXAMPLE))
    assert len(web) == 6
    assert len(list(web.pairs())) == 15
    assert relation_of(web, "a", "b") is Relation.PAR
    assert relation_of(web, "a", "c") is Relation.COPAR
    assert relation_of(web, "c", "e") is Relation.PAR
    assert relation_of(web, "d", "e") is Relation.SEQ
    assert relation_of(web, "f", "d") is Relation.COSEQ
    assert relation_of(web, "e", "f") is Relation.PAR


def test_relation_inverse() -> None:
    assert Relation.SEQ.inverse() is Relation.COSEQ
    assert Relation.COSEQ.inverse() is Relation.SEQ
    assert Relation.PAR.inverse() is Relation.PAR
    assert Relation.COSEQ.family is Relation.SEQ


def test_web_of_is_invariant() -> None:
    """Equal structures have equal webs, also for the relation of every pair."""
    assert web_of(parse("[<a;~b>,(~a,b)]")) == web_of(parse("[(b,~a),<a;~b>]"))
    web = web_of(parse("[<a;~b>,(~a,b)]"))
    assert relation_of(web, "a", "~b") is Relation.SEQ
    assert relation_of(web, "~a", "b") is Relation.COPAR
    assert relation_of(web, "a", "b") is Relation.PAR


def test_candidate_errors() -> None:
    a, b = Atom("a"), Atom("b")
    with pytest.raises(WebError):
        WebCandidate([a, b], [(0, 0, Relation.PAR)])
    with pytest.raises(WebError):
        WebCandidate([a, b], [])
    with pytest.raises(WebError):
        WebCandidate([a, b], [(0, 1, Relation.PAR), (1, 0, Relation.PAR)])
    with pytest.raises(WebError):
        WebCandidate([a, b], [(0, 2, Relation.PAR)])


def test_random_webs_are_webs() -> None:
    """Webs of structures satisfy every property and rebuild the structure."""
    rng = random.Random(7)
    for _ in range(1000):
        s = random_structure(rng, random_atoms(rng, "abcdefg"[: rng.randint(2, 7)]))
        web = web_of(s)
        assert verify_web_properties(web).passed
        assert check_inverse_square(web).passed
        result = reconstruct(web)
        assert result.structure == s
        assert result.merges == len(web) - 1


def test_reconstruct_example() -> None:
    result = reconstruct(web_of(parse(EXAMPLE)))
    assert to_text(result.structure) == "[(c,[a,b]),<d;[e,f]>]"
    assert result.merges == 5
    assert len(result.trace[0]) == 6
    assert len(result.trace[-1]) == 1


def test_reconstruct_empty() -> None:
    result = reconstruct(WebCandidate([], []))
    assert result.structure == parse("o")
    assert result.merges == 0


def test_not_a_web(fixtures_path: Path) -> None:
    candidate = load_web((fixtures_path / "path_not_web.json").read_text())
    report = verify_web_properties(candidate)
    assert not report
    assert {v.property for v in report.violations} <= {WebProperty.SQUARE_PAR, WebProperty.SQUARE_COPAR}
    with pytest.raises(NotAWebError) as info:
        reconstruct(candidate)
    assert info.value.partitions == 4


def test_seq_transitivity_violation() -> None:
    a, b, c = Atom("a"), Atom("b"), Atom("c")
    candidate = WebCandidate(
        [a, b, c], [(0, 1, Relation.SEQ), (1, 2, Relation.SEQ), (0, 2, Relation.PAR)]
    )
    kinds = {v.property for v in verify_web_properties(candidate).violations}
    assert WebProperty.SEQ_TRANSITIVITY in kinds
    assert WebProperty.TRIANGULAR not in kinds


def test_web_json(fixtures_path: Path) -> None:
    web = load_web((fixtures_path / "six_atoms_web.json").read_text())
    assert same_web(web, web_of(parse(EXAMPLE)))

    a, b = Atom("a"), Atom("b", negated=True)
    backwards = WebCandidate([a, b], [(1, 0, Relation.SEQ)])
    data = web_to_dict(backwards)
    assert data["relations"] == [{"a": 1, "b": 0, "rel": "seq"}]
    assert data["occurrences"][1] == {"id": 1, "atom": "b", "neg": True, "index": []}
    assert web_from_dict(json.loads(dump_web(backwards))) == backwards


@pytest.mark.parametrize(
    "data",
    [
        {"occurrences": [{"id": 0, "atom": "a"}, {"id": 1, "atom": "b"}], "relations": [{"a": 0, "b": 1, "rel": "coseq"}]},
        {"occurrences": [{"id": 1, "atom": "a"}], "relations": []},
        {"occurrences": [{"id": 0, "atom": "a"}]},
    ],
)
def test_web_json_errors(data: dict) -> None:
    with pytest.raises(WebError):
        web_from_dict(data)
    with pytest.raises(WebError):
        load_web("{not json")


def test_web_dot() -> None:
    dot = web_to_dot(web_of(parse(EXAMPLE)))
    assert dot.startswith("digraph web {")
    assert "->" in dot
    assert "[dir=none]" in dot
    assert "style=dashed" in dot
    assert 'label="a"' in dot


@pytest.mark.parametrize("number, text", [(0, "[(a,~b),(~a,b)]"), (1, "[<a;~b>,(~a,b)]"), (2, "[<a;~b>,<b;~a>]")])
def test_forbidden_patterns(number: int, text: str) -> None:
    found = forbidden_configs(web_of(parse(text)))
    assert [f.pattern for f in found] == [number]
    assert found[0].structure == text


def test_forbidden_patterns_renamed() -> None:
    """Patterns are found under any renaming and polarity of the atoms."""
    found = forbidden_configs(web_of(parse("[(~d,c),(d,~c),e]")))
    assert [f.pattern for f in found] == [0]


def test_no_forbidden_patterns_in_provable(s0) -> None:
    assert forbidden_configs(web_of(s0)) == []
    with pytest.raises(DuplicateAtomsError):
        forbidden_configs(web_of(parse("[a,a,~a]")))


def test_relation_diff_seq_merge() -> None:
    """The q↓ step <[a,c];[b,d]> over [<a;b>,<c;d>] changes two pairs."""
    conclusion = web_of(parse("[<a;b>,<c;d>]"))
    premise = web_of(parse("<[a,c];[b,d]>"))
    changes = relation_diff(conclusion, premise, match_by_label(conclusion, premise))
    described = [
        (str(conclusion.labels[i]), str(conclusion.labels[j]), c.before, c.after)
        for c in changes
        for i, j in [c.pair]
    ]
    assert described == [
        ("a", "d", Relation.PAR, Relation.SEQ),
        ("b", "c", Relation.PAR, Relation.COSEQ),
    ]


def test_relation_diff_errors() -> None:
    web = web_of(parse("[a,b]"))
    with pytest.raises(BadMatchingError):
        relation_diff(web, web, {0: 0, 1: 0})
    with pytest.raises(BadMatchingError):
        relation_diff(web, web, {0: 3})
    with pytest.raises(DuplicateAtomsError):
        match_by_label(web_of(parse("[a,a]")), web)


def test_same_web() -> None:
    assert same_web(web_of(parse("[a,b]")), web_of(parse("[b,a]")))
    assert not same_web(web_of(parse("<a;b>")), web_of(parse("<b;a>")))
    assert not same_web(web_of(parse("[a,b]")), web_of(parse("[a,c]")))


def test_web_of_copar_of_seq_and_par() -> None:
    web = web_of(parse("(<a;~b>,[~c,d])"))
    assert len(list(web.pairs())) == 6
    assert relation_of(web, "a", "~b") is Relation.SEQ
    assert relation_of(web, "~b", "a") is Relation.COSEQ
    assert relation_of(web, "~c", "d") is Relation.PAR
    for left in ("a", "~b"):
        for right in ("~c", "d"):
            assert relation_of(web, left, right) is Relation.COPAR


def test_triangular_violation_witness() -> None:
    a, b, c = Atom("a"), Atom("b"), Atom("c")
    candidate = WebCandidate([a, b, c], [(0, 1, Relation.COPAR), (1, 2, Relation.PAR), (0, 2, Relation.SEQ)])
    report = verify_web_properties(candidate)
    assert Violation(WebProperty.TRIANGULAR, (0, 1, 2)) in report.violations
    with pytest.raises(NotAWebError):
        reconstruct(candidate)


def test_square_par_violation() -> None:
    a, b, c, d = (Atom(n) for n in "abcd")
    candidate = WebCandidate(
        [a, b, c, d],
        {
            (0, 2): Relation.PAR,
            (0, 1): Relation.COPAR,
            (0, 3): Relation.COPAR,
            (2, 3): Relation.COPAR,
            (1, 2): Relation.PAR,
            (1, 3): Relation.PAR,
        },
    )
    kinds = {v.property for v in verify_web_properties(candidate).violations}
    assert WebProperty.SQUARE_PAR in kinds
    assert WebProperty.TRIANGULAR not in kinds


def test_inverse_square_of_nested_seq() -> None:
    web = web_of(parse("<b;[<a;c>,d]>"))
    assert relation_of(web, "a", "c") is Relation.SEQ
    assert relation_of(web, "b", "d") is Relation.SEQ
    assert relation_of(web, "a", "d") is Relation.PAR
    assert check_inverse_square(web).passed


@pytest.mark.parametrize("size", [3, 4])
def test_properties_agree_with_reconstruction(size: int) -> None:
    """Over every candidate on few occurrences, the properties hold iff a structure is rebuilt."""
    labels = [Atom(n) for n in "abcd"[:size]]
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    webs = 0
    for chosen in product(list(Relation), repeat=len(pairs)):
        candidate = WebCandidate(labels, dict(zip(pairs, chosen)))
        try:
            result = reconstruct(candidate)
        except NotAWebError:
            assert not verify_web_properties(candidate), repr(candidate)
            continue
        webs += 1
        assert verify_web_properties(candidate).passed, repr(candidate)
        assert same_web(web_of(result.structure), candidate)
    assert webs > 0


def test_equal_structures_iff_same_web() -> None:
    rng = random.Random(11)
    for _ in range(1000):
        leaves = random_atoms(rng, "abcdef"[: rng.randint(2, 6)])
        r = random_structure(rng, leaves)
        t = shuffled(rng, r) if rng.random() < 0.5 else random_structure(rng, leaves)
        assert (r == t) is same_web(web_of(r), web_of(t)), f"{r} {t}"


def test_substructure_web_is_restriction() -> None:
    """A substructure has the restricted web and one relation to each atom outside it."""
    rng = random.Random(13)
    for _ in range(1000):
        s = random_structure(rng, random_atoms(rng, "abcdef"[: rng.randint(2, 6)]))
        web, table = web_of(s), OccurrenceTable(s)
        context = rng.choice(list(positions(s)))
        depth = len(context.path)
        members = [
            o.index
            for o in table
            if o.path[:depth] == context.path and (not context.group or o.path[depth] in context.group)
        ]
        assert same_web(web_of(context.substructure), web.restrict(members)), str(context)
        for outside in set(range(len(web))).difference(members):
            assert len({web.relation(outside, i) for i in members}) == 1, str(context)


def test_interaction_keeps_relations() -> None:
    """Adding a dual pair anywhere leaves the relations of the other atoms unchanged."""
    rng = random.Random(17)
    pair = make(Kind.PAR, (atom("a"), atom("a", negated=True)))
    for _ in range(1000):
        r = random_structure(rng, random_atoms(rng, "bcdef"[: rng.randint(1, 5)]))
        context = rng.choice(list(positions(r)))
        node = context.substructure
        kind = rng.choice((Kind.PAR, Kind.COPAR, Kind.SEQ))
        filled = make(kind, (pair, node) if rng.random() < 0.5 else (node, pair))
        below, above = web_of(context.plug(filled)), web_of(r)
        assert relation_diff(above, below, match_by_label(above, below)) == []
