"""Session files: a ring declaration plus named ideals, sequences and options.

    ring R = QQ[x,y,z];          # or GF(7)[...], or K[...] for the default field
    ideal a = (x*y, x*z, y*z);
    seq s = [x*y, z*(x+y)];
    option seed = 3;

Expressions use + - * ^, parentheses, integer literals and the ring's
variables; division by an integer literal is allowed so that printed rational
polynomials parse back.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .ideals import Ideal
from .poly import Poly, Ring

CHAR_ENV = "RELCOH_CHAR"

OPTION_TYPES = {
    "order": str,
    "delta_max": int,
    "seed": int,
    "degree_bound": int,
    "search_limit": int,
    "trials": int,
}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>(\#|//)[^\n]*)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()\[\],;=])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                tokens.append(Token(kind, m.group(), line, col))
            col += len(m.group())
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


def default_characteristic() -> int:
    raw = os.environ.get(CHAR_ENV, "0").strip() or "0"
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{CHAR_ENV} must be an integer, got {raw!r}") from None


class _Parser:
    def __init__(self, tokens: list[Token], ring: Ring | None = None):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        tok = self.tok
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            raise self.error(f"expected {want}, got {got}")
        self.pos += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.tok.text == text and self.tok.kind == "op":
            self.pos += 1
            return True
        return False

    # expressions

    def expr(self) -> Poly:
        if self.accept("-"):
            value = -self.term()
        else:
            self.accept("+")
            value = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.power()
        while self.tok.text in ("*", "/") and self.tok.kind == "op":
            op = self.take().text
            if op == "*":
                value = value * self.power()
            else:
                tok = self.tok
                d = int(self.take(kind="int").text)
                if d == 0 or self.ring.field(d) == 0:
                    raise self.error("division by zero", tok)
                value = value.scale(self.ring.field.inv(self.ring.field(Fraction(d))))
        return value

    def power(self) -> Poly:
        base = self.atom()
        if self.accept("^"):
            tok = self.tok
            k = int(self.take(kind="int").text)
            if k > 10_000:
                raise self.error("exponent too large", tok)
            base = base ** k
        return base

    def atom(self) -> Poly:
        tok = self.tok
        if tok.kind == "int":
            self.pos += 1
            return self.ring.constant(int(tok.text))
        if tok.kind == "name":
            self.pos += 1
            if tok.text not in self.ring.names:
                raise self.error(f"unknown variable {tok.text!r}", tok)
            return self.ring.var(tok.text)
        if self.accept("("):
            value = self.expr()
            self.take(")")
            return value
        if self.accept("-"):
            return -self.atom()
        raise self.error(f"unexpected {tok.text!r}" if tok.kind != "eof" else "unexpected end of input")

    def expr_list(self, close: str) -> list[Poly]:
        items = []
        if self.tok.text == close:
            self.take(close)
            return items
        items.append(self.expr())
        while self.accept(","):
            items.append(self.expr())
        self.take(close)
        return items


@dataclass
class Session:
    """Parsed session: ring, named ideals (generator lists), sequences and options."""

    ring: Ring
    ring_name: str = "R"
    ideals: dict = field(default_factory=dict)
    seqs: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)

    def ideal(self, name: str) -> Ideal:
        if name not in self.ideals:
            raise KeyError(f"no ideal named {name!r}")
        return Ideal(self.ring, self.ideals[name])

    def seq(self, name: str) -> list[Poly]:
        if name in self.seqs:
            return list(self.seqs[name])
        if name in self.ideals:
            return list(self.ideals[name])
        raise KeyError(f"no sequence named {name!r}")

    def option(self, key: str, default=None):
        return self.options.get(key, default)

    def to_text(self) -> str:
        p = self.ring.characteristic
        field_name = "QQ" if p == 0 else f"GF({p})"
        lines = [f"ring {self.ring_name} = {field_name}[{','.join(self.ring.names)}];"]
        for name, gens in self.ideals.items():
            lines.append(f"ideal {name} = ({', '.join(str(g) for g in gens) or '0'});")
        for name, items in self.seqs.items():
            lines.append(f"seq {name} = [{', '.join(str(g) for g in items)}];")
        for key, value in self.options.items():
            lines.append(f"option {key} = {value};")
        return "\n".join(lines) + "\n"


def _parse_ring(p: _Parser) -> tuple[str, Ring]:
    name = p.take(kind="name").text
    p.take("=")
    tok = p.take(kind="name")
    char_tok = tok
    if tok.text == "QQ":
        char = 0
    elif tok.text == "K":
        char = default_characteristic()
    elif tok.text == "GF":
        p.take("(")
        char_tok = p.tok
        char = int(p.take(kind="int").text)
        p.take(")")
    else:
        raise p.error(f"unknown field {tok.text!r} (use QQ, GF(p) or K)", tok)
    p.take("[")
    names = []
    while True:
        vt = p.take(kind="name")
        if vt.text in names:
            raise p.error(f"duplicate variable {vt.text!r}", vt)
        names.append(vt.text)
        if not p.accept(","):
            break
    p.take("]")
    try:
        ring = Ring(names, characteristic=char)
    except ValueError as exc:
        raise p.error(str(exc), char_tok) from None
    return name, ring


def parse_session(text: str) -> Session:
    p = _Parser(tokenize(text))
    session = None
    names: set[str] = set()
    while p.tok.kind != "eof":
        kw = p.take(kind="name")
        if kw.text == "ring":
            if session is not None:
                raise p.error("only one ring declaration is allowed", kw)
            rname, ring = _parse_ring(p)
            session = Session(ring, rname)
            p.ring = ring
            names.add(rname)
        elif kw.text in ("ideal", "seq"):
            if session is None:
                raise p.error("declare the ring first", kw)
            nt = p.take(kind="name")
            if nt.text in names:
                raise p.error(f"duplicate name {nt.text!r}", nt)
            names.add(nt.text)
            p.take("=")
            if kw.text == "ideal":
                p.take("(")
                gens = [g for g in p.expr_list(")") if not g.is_zero()]
                session.ideals[nt.text] = tuple(gens)
            else:
                p.take("[")
                session.seqs[nt.text] = tuple(p.expr_list("]"))
        elif kw.text == "option":
            kt = p.take(kind="name")
            if kt.text not in OPTION_TYPES:
                raise p.error(f"unknown option {kt.text!r}", kt)
            p.take("=")
            vt = p.take()
            kind = OPTION_TYPES[kt.text]
            if kind is int:
                if vt.kind != "int":
                    raise p.error(f"option {kt.text} needs an integer", vt)
                value = int(vt.text)
            else:
                if vt.text not in ("lex", "grevlex"):
                    raise p.error("order must be lex or grevlex", vt)
                value = vt.text
            if session is None:
                raise p.error("declare the ring first", kt)
            session.options[kt.text] = value
        else:
            raise p.error(f"unknown statement {kw.text!r}", kw)
        p.take(";")
    if session is None:
        raise ParseError("no ring declaration", 1, 1)
    return session


def parse_polynomial(text: str, ring: Ring) -> Poly:
    p = _Parser(tokenize(text), ring)
    value = p.expr()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return value
