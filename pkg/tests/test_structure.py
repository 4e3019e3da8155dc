import random

import pytest

from _structures import random_atoms, random_structure, shuffled
from bvkit.exceptions import StructureSyntaxError
from bvkit.structure import (
    UNIT,
    Atom,
    AtomNode,
    OccurrenceTable,
    PositionedContext,
    Variable,
    atom,
    copar,
    depth_of_structure,
    find_hole,
    has_distinct_atoms,
    is_substructure,
    leaves,
    negate,
    par,
    parse,
    parse_context,
    parse_scheme,
    positions,
    replace_at,
    seq,
    subterm_at,
    to_text,
)


@pytest.mark.parametrize(
    "left, right",
    [
        ("[a,[b,c]]", "[c,b,a]"),
        ("(a,(b,c))", "((c,a),b)"),
        ("<a;<b;c>>", "<<a;b>;c>"),
        ("[a,o,(o,<b;o>)]", "[a,b]"),
        ("[a]", "a"),
        ("[]", "o"),
        ("~[a,<b;c>]", "(~a,<~b;~c>)"),
        ("~~a", "a"),
        ("~(a,~b)", "[~a,b]"),
    ],
)
def test_parse_equal(left: str, right: str) -> None:
    """Structures equal modulo the equations parse to the same canonical form."""
    assert parse(left) == parse(right)
    assert hash(parse(left)) == hash(parse(right))


@pytest.mark.parametrize("left, right", [("<a;b>", "<b;a>"), ("[a,b]", "(a,b)"), ("a", "~a")])
def test_parse_different(left: str, right: str) -> None:
    assert parse(left) != parse(right)


def test_canonical_text(s0) -> None:
    """Atoms sort before composites, a before ~a."""
    assert to_text(s0) == "[<~a;[~b,~c]>,<[a,b];c>]"
    assert to_text(parse("[~a,a]")) == "[a,~a]"
    assert str(parse("(b,[a,c])")) == "(b,[a,c])"
    assert parse(to_text(s0)) == s0


def test_builders() -> None:
    assert par(atom("b"), atom("a")) == parse("[a,b]")
    assert copar(atom("a"), UNIT) == atom("a")
    assert seq(atom("a"), seq(atom("b"), atom("c"))) == parse("<a;b;c>")
    assert parse("a_0.1") == AtomNode(Atom("a", index=(0, 1)))
    assert to_text(parse("~a_0.1")) == "~a_0.1"


@pytest.mark.parametrize(
    "text",
    ["[a,", "a b", "[a;b]", "<a,b>", "{}", "?x", "[a,]", "~", ")"],
)
def test_parse_errors(text: str) -> None:
    with pytest.raises(StructureSyntaxError):
        parse(text)


def test_parse_scheme() -> None:
    """Capitalized identifiers and ?x are variables only in schemes."""
    assert all(isinstance(leaf, Variable) for leaf in leaves(parse_scheme("[(R,T),U]")))
    assert all(isinstance(leaf, Atom) for leaf in leaves(parse("[(R,T),U]")))
    assert to_text(parse_scheme("[?x,~?x]")) == "[?x,~?x]"


def test_random_regrouping() -> None:
    """Reordering and regrouping children never changes the canonical form."""
    rng = random.Random(1234)
    for _ in range(1000):
        s = random_structure(rng, random_atoms(rng, "abcdef"))
        assert shuffled(rng, s) == s
        assert negate(negate(s)) == s
        assert parse(to_text(s)) == s


def test_context() -> None:
    context = parse_context("[a,<b;(c,{})>]")
    assert context.depth == 3
    assert find_hole(context.root) == context.path
    assert context.plug(parse("[d,e]")) == parse("[a,<b;(c,[d,e])>]")
    assert context.plug(UNIT) == parse("[a,<b;c>]")
    assert str(context) == "[a,<b;({},c)>]"


@pytest.mark.parametrize("text, depth", [("[a,b,{}]", 1), ("[<{};c>,<b;c>]", 2), ("{}", 0), ("(a,<b;[c,{}]>)", 3)])
def test_context_depths(text: str, depth: int) -> None:
    assert parse_context(text).depth == depth


def test_context_errors() -> None:
    with pytest.raises(StructureSyntaxError):
        parse_context("[a,b]")
    with pytest.raises(StructureSyntaxError):
        parse_context("[{},{}]")
    with pytest.raises(StructureSyntaxError):
        parse_context("~[a,{}]")


def test_positioned_context_groups() -> None:
    root = parse("[a,b,c]")
    single = PositionedContext(root, (), (1,))
    assert single.path == (1,) and single.group == ()
    assert PositionedContext(root, (), (0, 1, 2)).group == ()
    pair = PositionedContext(root, (), (0, 2))
    assert pair.depth == 1
    assert pair.substructure == parse("[a,c]")
    assert pair.plug(parse("<a;c>")) == parse("[b,<a;c>]")

    chain = parse("<a;b;c>")
    assert PositionedContext(chain, (), (1, 2)).plug(atom("d")) == parse("<a;d>")
    with pytest.raises(ValueError):
        PositionedContext(chain, (), (0, 2))
    with pytest.raises(ValueError):
        PositionedContext(root, (5,))


def test_positions() -> None:
    root = parse("[a,b,c]")
    assert len(list(positions(root))) == 7
    assert len(list(positions(root, groupings=False))) == 4
    assert len(list(positions(parse("<a;b;c>")))) == 6


def test_paths() -> None:
    s = parse("[a,<b;(c,d)>]")
    assert subterm_at(s, (1, 1)) == parse("(c,d)")
    assert replace_at(s, (1, 1), UNIT) == parse("[a,b]")
    with pytest.raises(ValueError):
        subterm_at(s, (0, 0))
    with pytest.raises(LookupError):
        find_hole(s)


def test_depth(s0) -> None:
    assert depth_of_structure(atom("a")) == 0
    assert depth_of_structure(UNIT) == 0
    assert depth_of_structure(parse("[a,b]")) == 1
    assert depth_of_structure(s0) == 3


def test_occurrences() -> None:
    table = OccurrenceTable(parse("[a,<~a;b>,a]"))
    assert len(table) == 4
    assert [str(leaf) for leaf in table.labels] == ["a", "a", "~a", "b"]
    assert table.find(Atom("a")) == [0, 1]
    assert table[3].path == (2, 1)
    assert not table.is_distinct()
    assert not has_distinct_atoms(table.structure)
    assert has_distinct_atoms(parse("[a,~a]"))


@pytest.mark.parametrize(
    "inner, outer, expected",
    [
        ("[a,b]", "[a,b,c]", True),
        ("[a,c]", "[a,b,c]", True),
        ("<a;b>", "<a;b;c>", True),
        ("<a;c>", "<a;b;c>", False),
        ("(a,b)", "[a,b]", False),
        ("b", "[a,(b,c)]", True),
        ("o", "a", True),
    ],
)
def test_is_substructure(inner: str, outer: str, expected: bool) -> None:
    assert is_substructure(parse(inner), parse(outer)) is expected
