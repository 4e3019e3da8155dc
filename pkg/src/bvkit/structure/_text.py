"""Text syntax of structures, schemes and contexts.

Grammar::

    term  := "~" term | "[" list "]" | "(" list ")" | "<" seqs ">"
           | "o" | "1" | "{}" | ident
    list  := [ term { "," term } ]
    seqs  := [ term { ";" term } ]
    ident := ["?"] letter { letter | digit | "'" } [ "_" digits { "." digits } ]

``o`` and ``1`` denote the unit and ``{}`` the hole of a context.
Negation binds tighter than every connective. In schemes, capitalized
identifiers are structure variables and ``?x`` is an atomic variable.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING, NamedTuple

from bvkit.exceptions import StructureSyntaxError
from bvkit.structure._atoms import Atom, Variable
from bvkit.structure._nodes import (
    HOLE,
    UNIT,
    AtomNode,
    Composite,
    Copar,
    Kind,
    Negation,
    Par,
    Seq,
    Structure,
    Term,
    VarNode,
    canonicalize,
)

if TYPE_CHECKING:
    from bvkit.structure._context import PositionedContext

__all__ = ["parse", "parse_scheme", "parse_context", "to_text"]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<hole>\{\s*\})
  | (?P<ident>\??[A-Za-z][A-Za-z0-9']*(?:_\d+(?:\.\d+)*)?)
  | (?P<unit>[1∘])
  | (?P<punct>[\[\]()<>,;~])
    """,
    re.VERBOSE,
)

_CLOSE = {"[": ("]", ",", Par), "(": (")", ",", Copar), "<": (">", ";", Seq)}


class _Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise StructureSyntaxError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = match.lastgroup or ""
        if kind == "ws":
            chunk = match.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rindex("\n") + 1
        else:
            tokens.append(_Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, *, scheme: bool, holes: bool) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0
        self.scheme = scheme
        self.holes = holes
        self.hole_count = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: _Token | None = None) -> StructureSyntaxError:
        token = token or self.peek()
        return StructureSyntaxError(message, token.line, token.column)

    def parse_all(self) -> Term:
        term = self.term()
        if self.peek().kind != "eof":
            raise self.error(f"unexpected {self.peek().text!r} after structure")
        return term

    def term(self) -> Term:
        token = self.advance()
        if token.kind == "punct":
            if token.text == "~":
                inner = self.term()
                if isinstance(inner, AtomNode):
                    return AtomNode(inner.atom.dual())
                if isinstance(inner, VarNode):
                    return VarNode(inner.variable.dual())
                return Negation(inner)
            if token.text in _CLOSE:
                return self.composite(token)
            raise self.error(f"unexpected {token.text!r}", token)
        if token.kind == "unit":
            return UNIT
        if token.kind == "hole":
            if not self.holes:
                raise self.error("a hole is only allowed in a context", token)
            self.hole_count += 1
            if self.hole_count > 1:
                raise self.error("a context has exactly one hole", token)
            return HOLE
        if token.kind == "ident":
            return self.leaf(token)
        raise self.error("unexpected end of input", token)

    def composite(self, opener: _Token) -> Term:
        close, sep, node_type = _CLOSE[opener.text]
        members: list[Term] = []
        if self.peek().text == close:
            self.advance()
            return UNIT
        while True:
            members.append(self.term())
            token = self.advance()
            if token.text == close:
                break
            if token.text != sep:
                raise self.error(f"expected {sep!r} or {close!r}", token)
        return node_type(tuple(members))

    def leaf(self, token: _Token) -> Term:
        text = token.text
        if text == "o":
            return UNIT
        atomic = text.startswith("?")
        if atomic:
            if not self.scheme:
                raise self.error("atomic variables are only allowed in schemes", token)
            return VarNode(Variable(text[1:], atomic=True))
        if self.scheme and text[0].isupper():
            return VarNode(Variable(text))
        name, _, index = text.partition("_")
        indices = tuple(int(i) for i in index.split(".")) if index else ()
        return AtomNode(Atom(name, index=indices))


def _finish(parser: _Parser, term: Term) -> Structure:
    try:
        return canonicalize(term)
    except ValueError as exc:
        raise parser.error(str(exc), parser.tokens[0]) from exc


def parse(text: str) -> Structure:
    """Parse a structure and return its canonical form.

    Parameters
    ----------
    text : str
        A structure such as ``[<a;~b>,(~a,b)]``.

    Returns
    -------
    Structure
        The canonical structure.

    Raises
    ------
    StructureSyntaxError
        If `text` is not a well-formed structure.
    """
    parser = _Parser(text, scheme=False, holes=False)
    return _finish(parser, parser.parse_all())


def parse_scheme(text: str) -> Structure:
    """Parse a structure scheme, where ``A`` and ``?x`` are variables."""
    parser = _Parser(text, scheme=True, holes=False)
    return _finish(parser, parser.parse_all())


def parse_context(text: str, *, scheme: bool = False) -> PositionedContext:
    """Parse a context with exactly one ``{}`` hole."""
    from bvkit.structure._context import PositionedContext, find_hole

    parser = _Parser(text, scheme=scheme, holes=True)
    term = parser.parse_all()
    if parser.hole_count != 1:
        raise parser.error("a context has exactly one hole", parser.tokens[0])
    root = _finish(parser, term)
    return PositionedContext(root, find_hole(root))


_OPEN = {Kind.PAR: ("[", ",", "]"), Kind.COPAR: ("(", ",", ")"), Kind.SEQ: ("<", ";", ">")}


def to_text(term: Term) -> str:
    """Render a structure in the syntax accepted by `parse`."""
    if isinstance(term, Negation):
        return "~" + to_text(term.body)
    if isinstance(term, AtomNode):
        return term.atom.label
    if isinstance(term, VarNode):
        return term.variable.label
    if isinstance(term, Composite):
        opener, sep, closer = _OPEN[term.kind]
        return opener + sep.join(to_text(m) for m in term.members) + closer
    if term.kind is Kind.HOLE:
        return "{}"
    return "o"
