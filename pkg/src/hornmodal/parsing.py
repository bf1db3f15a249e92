"""Parsers for the two input languages: modal formulas and Horn frame theories.

Formula grammar, loosest to tightest: `<->`, `->` (right-associative), `|`,
`&`, then the prefix operators `~`, `<i>`, `[i]`. Atoms are identifiers,
`true`, `false`, or a parenthesized formula.

Theory files start with `sig <n> <m>;` and continue with clauses of the form
`R1(x,y), R1(y,z) -> R1(x,z);`. `#` starts a line comment in both languages.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .formulas import (
    And,
    Bottom,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    Var,
)
from .theories import FrameTheory, HornClause, RelAtom

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<iff><->)
  | (?P<implies>->)
  | (?P<diamond><[0-9]+>)
  | (?P<lbracket>\[)
  | (?P<rbracket>\])
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<not>~)
  | (?P<and>&)
  | (?P<or>\|)
  | (?P<comma>,)
  | (?P<semi>;)
  | (?P<eq>=)
  | (?P<int>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, col)
        kind = m.lastgroup or ""
        text = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Cursor:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"expected {what}, found {tok.text!r}" if tok.text else f"expected {what}",
                tok.line,
                tok.column,
            )
        return self.next()


def parse_formula(source: str) -> Formula:
    cur = _Cursor(_tokenize(source))
    phi = _parse_iff(cur)
    tok = cur.peek()
    if tok.kind != "eof":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.column)
    return phi


def _parse_iff(cur: _Cursor) -> Formula:
    lhs = _parse_implies(cur)
    while cur.peek().kind == "iff":
        cur.next()
        lhs = Iff(lhs, _parse_implies(cur))
    return lhs


def _parse_implies(cur: _Cursor) -> Formula:
    lhs = _parse_or(cur)
    if cur.peek().kind == "implies":
        cur.next()
        return Implies(lhs, _parse_implies(cur))
    return lhs


def _parse_or(cur: _Cursor) -> Formula:
    lhs = _parse_and(cur)
    while cur.peek().kind == "or":
        cur.next()
        lhs = Or(lhs, _parse_and(cur))
    return lhs


def _parse_and(cur: _Cursor) -> Formula:
    lhs = _parse_unary(cur)
    while cur.peek().kind == "and":
        cur.next()
        lhs = And(lhs, _parse_unary(cur))
    return lhs


def _parse_unary(cur: _Cursor) -> Formula:
    tok = cur.peek()
    if tok.kind == "not":
        cur.next()
        return Not(_parse_unary(cur))
    if tok.kind == "diamond":
        cur.next()
        index = int(tok.text[1:-1])
        if index < 1:
            raise ParseError("relation index must be >= 1", tok.line, tok.column)
        return Diamond(index, _parse_unary(cur))
    if tok.kind == "lbracket":
        cur.next()
        idx_tok = cur.expect("int", "relation index")
        index = int(idx_tok.text)
        if index < 1:
            raise ParseError("relation index must be >= 1", idx_tok.line, idx_tok.column)
        cur.expect("rbracket", "']'")
        return Box(index, _parse_unary(cur))
    return _parse_atom(cur)


def _parse_atom(cur: _Cursor) -> Formula:
    tok = cur.peek()
    if tok.kind == "lparen":
        cur.next()
        phi = _parse_iff(cur)
        cur.expect("rparen", "')'")
        return phi
    if tok.kind == "ident":
        cur.next()
        if tok.text == "true":
            return Top()
        if tok.text == "false":
            return Bottom()
        return Var(tok.text)
    raise ParseError(
        f"expected a formula, found {tok.text!r}" if tok.text else "expected a formula",
        tok.line,
        tok.column,
    )


_REL_NAME_RE = re.compile(r"^R([0-9]+)$")


def parse_theory(source: str) -> FrameTheory:
    cur = _Cursor(_tokenize(source))
    sig_tok = cur.expect("ident", "'sig'")
    if sig_tok.text != "sig":
        raise ParseError("theory must start with 'sig <n> <m>;'", sig_tok.line, sig_tok.column)
    free = int(cur.expect("int", "relation count").text)
    transitive = int(cur.expect("int", "transitive relation count").text)
    cur.expect("semi", "';'")
    relation_count = free + transitive

    clauses: list[HornClause] = []
    while cur.peek().kind != "eof":
        clauses.append(_parse_clause(cur, relation_count))
        tok = cur.peek()
        if tok.kind == "semi":
            cur.next()
        elif tok.kind != "eof":
            raise ParseError(f"expected ';' after clause, found {tok.text!r}", tok.line, tok.column)
    return FrameTheory(free=free, transitive=transitive, clauses=tuple(clauses))


def _parse_clause(cur: _Cursor, relation_count: int) -> HornClause:
    body: list[RelAtom] = []
    first = cur.peek()
    if first.kind != "implies":
        body.append(_parse_rel_atom(cur, relation_count))
        while cur.peek().kind == "comma":
            cur.next()
            body.append(_parse_rel_atom(cur, relation_count))
    arrow = cur.expect("implies", "'->'")
    head = _parse_rel_atom(cur, relation_count)
    after = cur.peek()
    if after.kind == "comma":
        raise ParseError("clause must have exactly one head atom", after.line, after.column)
    clause = HornClause(body=tuple(body), head=head)
    if not clause.is_safe():
        unsafe = sorted(set(head.variables()) - {v for a in body for v in a.variables()})
        raise ParseError(
            f"head variable(s) {', '.join(unsafe)} do not occur in the clause body",
            arrow.line,
            arrow.column,
        )
    return clause


def _parse_rel_atom(cur: _Cursor, relation_count: int) -> RelAtom:
    tok = cur.peek()
    if tok.kind == "not":
        raise ParseError("negated atoms are not allowed in Horn clauses", tok.line, tok.column)
    name = cur.expect("ident", "relation atom like R1(x,y)")
    m = _REL_NAME_RE.match(name.text)
    if m is None:
        raise ParseError(
            f"expected relation atom like R1(x,y), found {name.text!r}", name.line, name.column
        )
    index = int(m.group(1))
    if index < 1:
        raise ParseError("relation index must be >= 1", name.line, name.column)
    if index > relation_count:
        raise ParseError(
            f"relation index {index} exceeds signature {relation_count}", name.line, name.column
        )
    cur.expect("lparen", "'('")
    source = _parse_clause_var(cur)
    cur.expect("comma", "','")
    target = _parse_clause_var(cur)
    cur.expect("rparen", "')'")
    tok = cur.peek()
    if tok.kind == "eq":
        raise ParseError("equality atoms are not allowed", tok.line, tok.column)
    return RelAtom(index, source, target)


def _parse_clause_var(cur: _Cursor) -> str:
    tok = cur.peek()
    if tok.kind == "eq":
        raise ParseError("equality atoms are not allowed", tok.line, tok.column)
    return cur.expect("ident", "variable name").text
