"""Text and JSON formats for polynomials and maps.

Expression grammar (whitespace-insensitive):

    expr   :=  ["-"] term { ("+" | "-") term }
    term   :=  unary { "*" unary }
    unary  :=  "-" unary | power
    power  :=  atom [ "^" nat ]
    atom   :=  rational | variable | "(" expr ")"

Variables are x1..xN (case-insensitive); when n <= 3 the aliases X, Y, Z
are also accepted.  Rational literals are `p` or `p/q`.  Multiplication is
always explicit: `2*x1*x2^3`, never `2x1` (which would make `x12` ambiguous).
`^` binds tightest, then unary minus, then `*`, then binary +/-.

A map is a comma-separated list of n expressions.  Rendering emits terms in
descending lexicographic order of exponent vectors, always with x1..xN
names, so parse(render(p)) == p and equal polynomials render identically.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .endo import Endo
from .poly import Poly


class ParseError(ValueError):
    """Syntax or semantic error in an expression, with source position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.message = message
        self.pos = pos


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^/(),]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if at >= len(text):
                break
            raise ParseError(f"unexpected character {text[at]!r}", at)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        self.n = n
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def accept(self, text: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "op" and val == text:
            self.k += 1
            return True
        return False

    def fail(self, message: str):
        raise ParseError(message, self.peek()[2])

    # ------------------------------------------------------------------

    def expr(self) -> Poly:
        p = -self.term() if self.accept("-") else self.term()
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Poly:
        p = self.unary()
        while self.accept("*"):
            p = p * self.unary()
        return p

    def unary(self) -> Poly:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.accept("^"):
            kind, val, pos = self.next()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            return base ** int(val)
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.next()
        if kind == "int":
            num = int(val)
            if self.accept("/"):
                dkind, dval, dpos = self.next()
                if dkind != "int":
                    raise ParseError("denominator must be an integer", dpos)
                if int(dval) == 0:
                    raise ParseError("zero denominator", dpos)
                return Poly.constant(self.n, Fraction(num, int(dval)))
            return Poly.constant(self.n, num)
        if kind == "name":
            return Poly.variable(self.n, self.variable_index(val, pos))
        if kind == "op" and val == "(":
            p = self.expr()
            if not self.accept(")"):
                self.fail("expected ')'")
            return p
        raise ParseError(
            "expected a number, variable, or '('" if kind != "end"
            else "unexpected end of input",
            pos,
        )

    def variable_index(self, name: str, pos: int) -> int:
        m = re.fullmatch(r"[xX](\d+)", name)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= self.n:
                raise ParseError(
                    f"variable {name} out of range for dimension {self.n}", pos
                )
            return i
        alias = {"x": 1, "y": 2, "z": 3}.get(name.lower())
        if alias is not None and self.n <= 3:
            if alias > self.n:
                raise ParseError(
                    f"variable {name} out of range for dimension {self.n}", pos
                )
            return alias
        raise ParseError(f"unknown variable {name!r}", pos)


def parse_poly(text: str, n: int) -> Poly:
    """Parse one expression as a dimension-n polynomial."""
    p = _Parser(text, n)
    result = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r} after expression", pos)
    return result


def parse_map(text: str, n: int) -> Endo:
    """Parse n comma-separated expressions as an endomorphism."""
    p = _Parser(text, n)
    coords = [p.expr()]
    while p.accept(","):
        coords.append(p.expr())
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r} after expression", pos)
    if len(coords) != n:
        raise ParseError(
            f"expected {n} comma-separated coordinates, got {len(coords)}", pos
        )
    return Endo(coords)


# ----------------------------------------------------------------------
# rendering

def _render_monomial(mono) -> str:
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def render_poly(p: Poly) -> str:
    """Deterministic rendering; terms in descending lex order."""
    if p.is_zero:
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms():
        mag = -coeff if coeff < 0 else coeff
        mono_str = _render_monomial(mono)
        if not mono_str:
            body = str(mag)
        elif mag == 1:
            body = mono_str
        else:
            body = f"{mag}*{mono_str}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)


def render_map(g: Endo) -> str:
    return ", ".join(render_poly(c) for c in g.coords)


# ----------------------------------------------------------------------
# the JSON map document

@dataclass(frozen=True)
class MapDocument:
    """A dimension plus n coordinate expression strings, with optional
    metadata.  The expressions must parse in dimension n; to_endo gives the
    parsed map."""

    n: int
    coords: tuple
    name: str | None = None
    notes: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        if len(self.coords) != self.n:
            raise ValueError(
                f"expected {self.n} coordinate expressions, got {len(self.coords)}"
            )
        for expr in self.coords:
            parse_poly(expr, self.n)

    @classmethod
    def from_endo(cls, g: Endo, name: str | None = None,
                  notes: str | None = None) -> "MapDocument":
        return cls(g.n, tuple(render_poly(c) for c in g.coords), name, notes)

    def to_endo(self) -> Endo:
        return Endo([parse_poly(expr, self.n) for expr in self.coords])

    def to_json_dict(self) -> dict:
        doc = {"n": self.n, "coords": list(self.coords)}
        if self.name is not None:
            doc["name"] = self.name
        if self.notes is not None:
            doc["notes"] = self.notes
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, doc) -> "MapDocument":
        if not isinstance(doc, dict):
            raise ValueError("map document must be a JSON object")
        unknown = set(doc) - {"n", "coords", "name", "notes"}
        if unknown:
            raise ValueError(f"unknown map document fields: {sorted(unknown)}")
        if "n" not in doc or "coords" not in doc:
            raise ValueError("map document needs 'n' and 'coords'")
        coords = doc["coords"]
        if not isinstance(coords, list) or not all(isinstance(c, str) for c in coords):
            raise ValueError("'coords' must be a list of strings")
        return cls(doc["n"], tuple(coords), doc.get("name"), doc.get("notes"))

    @classmethod
    def from_json(cls, text: str) -> "MapDocument":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(doc)
