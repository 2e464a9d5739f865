"""Parsing and serialization of polynomial expressions and field towers.

The expression grammar is deliberately small: integer and rational
literals, named generators and variables, +, -, *, ^ and parentheses.
Multiplication is always explicit, so "2u" is a syntax error and "2*u"
is not.  Canonical string output from the polynomial types parses back
to an equal object.
"""

from __future__ import annotations

from .errors import InvalidInput, ParseError
from .numfield import QQ, FieldElement, FieldTower, Rational, extend_field
from .bipoly import BiPoly, UniPoly

_OPS = set("+-*^()/")


def _tokenize(text: str):
    if not isinstance(text, str):
        raise ParseError(f"expected an expression string, got {type(text).__name__}")
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            toks.append(("OP", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    toks.append(("END", "", n))
    return toks


class _Parser:
    """Recursive descent over the token list, building through an atom factory."""

    def __init__(self, text: str, atoms):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.atoms = atoms

    def _peek(self):
        return self.toks[self.i]

    def _next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def _fail(self, tok, what: str):
        kind, val, pos = tok
        got = "end of input" if kind == "END" else repr(val)
        raise ParseError(f"expected {what} at position {pos}, got {got}")

    def parse(self):
        kind, _, _ = self._peek()
        if kind == "END":
            raise ParseError("empty expression")
        value = self._expr()
        tok = self._peek()
        if tok[0] != "END":
            self._fail(tok, "an operator or end of input")
        return value

    def _expr(self):
        value = self._term()
        while True:
            kind, val, _ = self._peek()
            if kind == "OP" and val in "+-":
                self._next()
                rhs = self._term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def _term(self):
        value = self._factor()
        while True:
            kind, val, _ = self._peek()
            if kind == "OP" and val == "*":
                self._next()
                value = value * self._factor()
            else:
                return value

    def _factor(self):
        kind, val, _ = self._peek()
        if kind == "OP" and val == "-":
            self._next()
            return -self._factor()
        return self._primary()

    def _primary(self):
        value = self._atom()
        kind, val, _ = self._peek()
        if kind == "OP" and val == "^":
            self._next()
            tok = self._next()
            if tok[0] != "INT":
                self._fail(tok, "an integer exponent")
            value = value ** int(tok[1])
        return value

    def _atom(self):
        tok = self._next()
        kind, val, pos = tok
        if kind == "INT":
            num = int(val)
            nk, nv, _ = self._peek()
            if nk == "OP" and nv == "/":
                self._next()
                dtok = self._next()
                if dtok[0] != "INT":
                    self._fail(dtok, "an integer denominator")
                den = int(dtok[1])
                if den == 0:
                    raise ParseError(f"zero denominator at position {dtok[2]}")
                return self.atoms.from_rational(Rational(num, den))
            return self.atoms.from_rational(Rational(num))
        if kind == "NAME":
            return self.atoms.from_name(val, pos)
        if kind == "OP" and val == "(":
            value = self._expr()
            tok = self._next()
            if tok[0] != "OP" or tok[1] != ")":
                self._fail(tok, "a closing parenthesis")
            return value
        self._fail(tok, "a number, a name or a parenthesized expression")


class _BiAtoms:
    def __init__(self, tower: FieldTower):
        self.tower = tower

    def from_rational(self, q):
        return BiPoly.constant(self.tower, q)

    def from_name(self, name, pos):
        if name in ("u", "v"):
            return BiPoly.variable(self.tower, name)
        if name in self.tower.names():
            return BiPoly.constant(self.tower, self.tower.gen(name))
        known = ("u", "v") + self.tower.names()
        raise ParseError(
            f"unknown name {name!r} at position {pos}; known names: "
            + ", ".join(known)
        )


class _UniAtoms:
    def __init__(self, tower: FieldTower, var: str):
        self.tower = tower
        self.var = var

    def from_rational(self, q):
        return UniPoly.constant(self.tower, self.var, q)

    def from_name(self, name, pos):
        if name == self.var:
            return UniPoly.variable(self.tower, self.var)
        if name in self.tower.names():
            return UniPoly.constant(self.tower, self.var, self.tower.gen(name))
        known = (self.var,) + self.tower.names()
        raise ParseError(
            f"unknown name {name!r} at position {pos}; known names: "
            + ", ".join(known)
        )


class _ElemAtoms:
    def __init__(self, tower: FieldTower):
        self.tower = tower

    def from_rational(self, q):
        return self.tower.rational(q)

    def from_name(self, name, pos):
        if name in self.tower.names():
            return self.tower.gen(name)
        raise ParseError(
            f"unknown name {name!r} at position {pos}; known names: "
            + ", ".join(self.tower.names() or ("none",))
        )


def parse_bipoly(text: str, tower: FieldTower) -> BiPoly:
    """Parse an expression in u, v and the tower's generators."""
    return _Parser(text, _BiAtoms(tower)).parse()


def parse_unipoly(text: str, tower: FieldTower, var: str) -> UniPoly:
    """Parse an expression in one named variable and the tower's generators."""
    return _Parser(text, _UniAtoms(tower, var)).parse()


def parse_element(text: str, tower: FieldTower) -> FieldElement:
    """Parse a constant expression in the tower's generators."""
    return _Parser(text, _ElemAtoms(tower)).parse()


def tower_to_json(tower: FieldTower) -> list:
    """Describe a tower as a list of {name, minpoly} dicts, minpolys in t."""
    out = []
    for j, (name, minpoly) in enumerate(tower.generators()):
        poly = UniPoly(tower.subtower(j), "t", minpoly)
        out.append({"name": name, "minpoly": str(poly)})
    return out


def tower_from_json(data) -> FieldTower:
    """Rebuild a tower from its JSON description, re-verifying each level."""
    if not isinstance(data, list):
        raise InvalidInput("tower description must be a list")
    tower = QQ
    for entry in data:
        if not isinstance(entry, dict) or set(entry) != {"name", "minpoly"}:
            raise InvalidInput(
                "each tower level must be an object with 'name' and 'minpoly'"
            )
        name = entry["name"]
        if not isinstance(name, str):
            raise InvalidInput("generator names must be strings")
        poly = parse_unipoly(entry["minpoly"], tower, "t")
        tower, _, _ = extend_field(tower, poly, name)
    return tower
