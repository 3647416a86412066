"""Line-oriented problem files: one automaton plus left/right initial measures.

Example::

    alphabet a
    state s
    state u
    trans s = 1/2 eps + 1/2 a.s
    trans u = 1/2 eps^2 + 1/2 (a.u)
    left 1 { s }
    right 1 { u }
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from pkaequiv.algebra import EPS, EPS_KIND, state_at
from pkaequiv.automaton import Automaton, MeasureSeed
from pkaequiv.poly import ONE, Polynomial, ZERO

KEYWORDS = ("alphabet", "state", "trans", "left", "right")
_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_']*)|(?P<sym>[/=+{}().^]))")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class Problem:
    alphabet: tuple = ()
    states: tuple = ()
    trans: dict = field(default_factory=dict)
    left: MeasureSeed = field(default_factory=MeasureSeed)
    right: MeasureSeed = field(default_factory=MeasureSeed)

    def automaton(self) -> Automaton:
        return Automaton(self.alphabet, self.states,
                         tuple(self.trans.get(s, ZERO) for s in self.states))


def _tokenize(text: str, lineno: int, offset: int) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", lineno, offset + bad + 1)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), offset + start + 1))
        pos = m.end()
    return toks


class _Line:
    def __init__(self, toks: list, lineno: int, width: int):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.width = width

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.width + 1)

    def next(self):
        tok = self.peek()
        if tok[0] is None:
            self.error("unexpected end of line")
        self.i += 1
        return tok

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.lineno, tok[2])

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value:
            self.error(f"expected {value!r}, found {tok[1]!r}", tok)
        return tok

    def at(self, value: str) -> bool:
        return self.peek()[1] == value

    def done(self) -> bool:
        return self.i >= len(self.toks)


def _rational(ln: _Line) -> Fraction:
    tok = ln.next()
    if tok[0] != "num":
        ln.error(f"expected a number, found {tok[1]!r}", tok)
    num = int(tok[1])
    if ln.at("/"):
        ln.next()
        den_tok = ln.next()
        if den_tok[0] != "num" or int(den_tok[1]) <= 0:
            ln.error("denominator must be a positive integer", den_tok)
        return Fraction(num, int(den_tok[1]))
    return Fraction(num)


def parse(text: str) -> Problem:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = _tokenize(body, lineno, 0)
        if toks:
            lines.append(_Line(toks, lineno, len(body)))

    alphabet: list = []
    states: list = []
    # declarations first so later lines may reference anything declared
    for ln in lines:
        kind, value, col = ln.peek()
        if value not in KEYWORDS or kind != "id":
            ln.error(f"expected one of {', '.join(KEYWORDS)}")
        if value == "alphabet":
            ln.next()
            if ln.done():
                ln.error("alphabet needs at least one letter")
            while not ln.done():
                tok = ln.next()
                if tok[0] != "id" or len(tok[1]) != 1:
                    ln.error(f"letters are single characters, found {tok[1]!r}", tok)
                if tok[1] in alphabet:
                    ln.error(f"duplicate letter {tok[1]!r}", tok)
                alphabet.append(tok[1])
        elif value == "state":
            ln.next()
            tok = ln.next()
            if tok[0] != "id" or tok[1] == "eps":
                ln.error(f"bad state name {tok[1]!r}", tok)
            if tok[1] in states:
                ln.error(f"duplicate state {tok[1]!r}", tok)
            states.append(tok[1])
            if not ln.done():
                ln.error("trailing input after state declaration")

    prob = Problem(tuple(alphabet), tuple(states))
    left_terms: list = []
    right_terms: list = []
    for ln in lines:
        ln.i = 0
        _, value, _ = ln.next()
        if value == "trans":
            tok = ln.next()
            name = tok[1]
            if name not in states:
                ln.error(f"undeclared state {name!r}", tok)
            if name in prob.trans:
                ln.error(f"duplicate transition for {name!r}", tok)
            ln.expect("=")
            prob.trans[name] = _poly(ln, prob)
        elif value in ("left", "right"):
            w = _rational(ln)
            ln.expect("{")
            ms = []
            while not ln.at("}"):
                tok = ln.next()
                if tok[1] not in states:
                    ln.error(f"undeclared state {tok[1]!r}", tok)
                ms.append(states.index(tok[1]))
            ln.expect("}")
            (left_terms if value == "left" else right_terms).append((w, tuple(ms)))
        else:
            continue
        if not ln.done():
            ln.error(f"unexpected {ln.peek()[1]!r}")
    prob.left = MeasureSeed(tuple(left_terms))
    prob.right = MeasureSeed(tuple(right_terms))
    return prob


def _poly(ln: _Line, prob: Problem) -> Polynomial:
    total = _term(ln, prob)
    while ln.at("+"):
        ln.next()
        total = total + _term(ln, prob)
    return total


def _term(ln: _Line, prob: Problem) -> Polynomial:
    coef = Fraction(1)
    seen = False
    if ln.peek()[0] == "num":
        coef = _rational(ln)
        seen = True
    out = Polynomial.const(coef)
    while True:
        kind, value, _ = ln.peek()
        if value == "(" or kind == "id":
            out = out * _factor(ln, prob)
            seen = True
        else:
            break
    if not seen:
        ln.error("expected a term")
    return out


def _factor(ln: _Line, prob: Problem) -> Polynomial:
    if ln.at("("):
        ln.next()
        base = _atom(ln, prob)
        ln.expect(")")
    else:
        base = _atom(ln, prob)
    if ln.at("^"):
        ln.next()
        tok = ln.next()
        if tok[0] != "num" or int(tok[1]) < 0:
            ln.error("exponent must be a natural number", tok)
        return base ** int(tok[1])
    return base


def _atom(ln: _Line, prob: Problem) -> Polynomial:
    tok = ln.next()
    if tok[0] != "id":
        ln.error(f"expected eps or letter.state, found {tok[1]!r}", tok)
    if tok[1] == "eps":
        return Polynomial.var(EPS)
    if tok[1] not in prob.alphabet:
        ln.error(f"undeclared letter {tok[1]!r}", tok)
    ln.expect(".")
    st = ln.next()
    if st[1] not in prob.states:
        ln.error(f"undeclared state {st[1]!r}", st)
    return Polynomial.var(state_at((prob.alphabet.index(tok[1]),), prob.states.index(st[1])))


def format_poly(p: Polynomial, alphabet, states) -> str:
    if not p:
        return "0"
    parts = []
    for mono in sorted(p.terms, key=_term_key):
        c = p.terms[mono]
        factors = []
        for v, e in mono:
            if v.kind == EPS_KIND:
                atom = "eps"
            else:
                atom = f"{alphabet[v.word[0]]}.{states[v.state]}"
            factors.append(atom if e == 1 else f"{atom}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append(" ".join(factors))
        else:
            parts.append(f"{c} " + " ".join(factors))
    return " + ".join(parts)


def _term_key(mono):
    return tuple((v.kind, v.word, v.state, e) for v, e in mono)


def format_problem(prob: Problem) -> str:
    out = [f"alphabet {' '.join(prob.alphabet)}"]
    out += [f"state {s}" for s in prob.states]
    for s in prob.states:
        if s in prob.trans:
            out.append(f"trans {s} = {format_poly(prob.trans[s], prob.alphabet, prob.states)}")
    for side, mu in (("left", prob.left), ("right", prob.right)):
        for w, ms in mu.terms:
            body = " ".join(prob.states[i] for i in ms)
            out.append(f"{side} {w} {{ {body} }}" if body else f"{side} {w} {{ }}")
    return "\n".join(out) + "\n"


def load(path) -> Problem:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


__all__ = ["ParseError", "Problem", "format_poly", "format_problem", "load", "parse", "ONE"]
