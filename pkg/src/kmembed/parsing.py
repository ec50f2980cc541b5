"""Scalar and matrix expression parser.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    exponent := ('+' | '-')? INT | '(' ('+' | '-')? INT ')'
    atom   := INT | 'x_' ['-'] INT | 't' | 'a' | '(' expr ')'

``x_i`` is the field variable t_i, ``t`` the loop variable (ring k[t]) and
``a`` the generator of a number field (ring L).  Values are folded directly
in the target ring, so every result is already in canonical form.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, NotInvertible, ParseError, RingMismatch
from .matrices import Matrix
from .rings import K, KT, QQ, Ring, laurent_t, t

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<var>x_-?\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()\[\],]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


def ring_from_tag(tag: str, min_poly=None) -> Ring:
    if tag == "Q":
        return QQ
    if tag == "k":
        return K
    if tag in ("k[t]", "k[t,t^-1]"):
        return KT
    if tag == "L":
        if min_poly is None:
            raise ParseError("ring L needs a minimal polynomial")
        from .number_fields import NumberField

        return NumberField(min_poly)
    raise ParseError(f"unknown ring tag {tag!r}")


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, self.text, tok.pos)

    def eat(self, text=None, kind=None) -> Token:
        tok = self.tok
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = text or kind
            found = tok.text or "end of input"
            raise self.error(f"expected {want!r}, found {found!r}")
        self.i += 1
        return tok

    def at(self, text) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def expect_end(self):
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")

    # grammar

    def expr(self):
        v = self.term()
        while self.at("+") or self.at("-"):
            op = self.eat().text
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.at("*") or self.at("/"):
            tok = self.eat()
            w = self.unary()
            if tok.text == "*":
                v = v * w
            else:
                v = self._divide(v, w, tok)
        return v

    def _divide(self, v, w, tok):
        if w == 0:
            raise DivisionByZero(f"division by zero at column {tok.pos}: {self.text!r}")
        try:
            return v * self.ring.inverse(w)
        except NotInvertible as exc:
            raise NotInvertible(f"{exc} (column {tok.pos}: {self.text!r})") from exc

    def unary(self):
        if self.at("-"):
            self.eat()
            return -self.unary()
        if self.at("+"):
            self.eat()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            tok = self.eat()
            e = self.exponent()
            if e < 0:
                if base == 0:
                    raise DivisionByZero(f"division by zero at column {tok.pos}: {self.text!r}")
                base = self.ring.inverse(base)
                e = -e
            return base ** e
        return base

    def exponent(self) -> int:
        paren = self.at("(")
        if paren:
            self.eat()
        sign = 1
        if self.at("-") or self.at("+"):
            sign = -1 if self.eat().text == "-" else 1
        e = sign * int(self.eat(kind="int").text)
        if paren:
            self.eat(")")
        return e

    def atom(self):
        tok = self.tok
        if tok.kind == "int":
            self.eat()
            return self.ring.coerce(int(tok.text))
        if tok.kind == "var":
            self.eat()
            if self.ring.tag not in ("k", "k[t]"):
                raise self.error(f"unknown variable {tok.text!r} in ring {self.ring.tag}", tok)
            return self.ring.coerce(t(int(tok.text[2:])))
        if tok.kind == "name":
            self.eat()
            if tok.text == "t" and self.ring.tag == "k[t]":
                return laurent_t()
            if tok.text == "a" and self.ring.tag == "L":
                return self.ring.gen
            raise self.error(f"unknown variable {tok.text!r} in ring {self.ring.tag}", tok)
        if self.at("("):
            self.eat()
            v = self.expr()
            self.eat(")")
            return v
        raise self.error(f"unexpected {tok.text or 'end of input'!r}")

    def matrix_rows(self):
        self.eat("[")
        rows = [self.row()]
        while self.at(","):
            self.eat()
            rows.append(self.row())
        self.eat("]")
        return rows

    def row(self):
        self.eat("[")
        vals = [self.expr()]
        while self.at(","):
            self.eat()
            vals.append(self.expr())
        self.eat("]")
        return vals


def parse_scalar_expression(text: str, ring: Ring = K):
    """Parse ``text`` into an element of ``ring`` (default: k)."""
    p = _Parser(text, ring)
    v = p.expr()
    p.expect_end()
    return v


def parse_matrix(text: str, ring: Ring = K) -> Matrix:
    """Parse an inline matrix literal such as ``[[2, 3], [1, 2]]``."""
    p = _Parser(text, ring)
    rows = p.matrix_rows()
    p.expect_end()
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParseError("matrix literal must be square", text, 0)
    return Matrix(rows, ring)


def matrix_from_record(rec: dict, ring: Ring | None = None) -> Matrix:
    """Inverse of :meth:`Matrix.to_record`."""
    try:
        n = int(rec["n"])
        entries = rec["entries"]
        tag = rec.get("ring", "k")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix record: {exc}") from exc
    if ring is None:
        ring = ring_from_tag(tag, rec.get("min_poly"))
    if isinstance(entries, list) and entries and isinstance(entries[0], list):
        entries = [x for r in entries for x in r]
    if len(entries) != n * n:
        raise ParseError(f"matrix record has {len(entries)} entries, expected {n * n}")
    vals = [parse_scalar_expression(str(e), ring) for e in entries]
    return Matrix([vals[i * n:(i + 1) * n] for i in range(n)], ring)


def load_matrices(text: str, ring: Ring | None = None) -> list:
    """Matrices from file contents: a JSON record, a JSON list of records, or
    one inline matrix literal per non-empty line."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("[{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if isinstance(data, dict) and "generators" in data:
            data = data["generators"]
        if isinstance(data, dict):
            data = [data]
        return [matrix_from_record(r, ring) for r in data]
    out = []
    for line in stripped.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(parse_matrix(line, ring or K))
    return out


def serialize_scalar(x, ring: Ring | None = None) -> str:
    if ring is not None:
        return ring.serialize(x)
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def narrowest_ring(g: Matrix) -> Matrix:
    """Move a matrix over k down to Q when every entry is constant."""
    if g.ring.tag in ("k", "k[t]"):
        try:
            return g.to_ring(QQ)
        except RingMismatch:
            return g
    return g
