"""Tame generator words and the elementary-then-diagonal normal form.

Generators come in three kinds: Diagonal (c_1 X_1, ..., c_n X_n) with all
c_i nonzero, Elementary (X_i replaced by X_i + g where g does not involve
X_i), and invertible Affine maps X -> AX + b.  A TameWord is a finite
composition, written left to right with the leftmost factor applied last,
F = G_1 o ... o G_s.

normal_form rewrites any word as E_1 o ... o E_s o D: affines are expanded
into transvections and diagonals by Gaussian elimination, then every
diagonal is pushed to the right through the elementaries using the exact
rewriting D o E = E~ o D.  The rewriting rule is taken from the composition
identity itself: E~ adds g~ = c_i * g(X_1/c_1, ..., X_n/c_n) to slot i, and
the identity D o E = E~ o D is asserted after every push.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .endo import Endo
from .linalg import mat_det, mat_inverse, mat_vec
from .poly import Poly
from .textio import parse_poly, render_poly


@dataclass(frozen=True)
class Diagonal:
    """(c_1 X_1, ..., c_n X_n) with every c_i nonzero."""

    c: tuple

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.c)
        if not c:
            raise ValueError("diagonal needs at least one entry")
        if any(v == 0 for v in c):
            raise ValueError("diagonal entries must be nonzero")
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return len(self.c)


@dataclass(frozen=True)
class Elementary:
    """X_i replaced by X_i + g, all other coordinates fixed; g must not
    involve X_i."""

    i: int
    g: Poly

    def __post_init__(self):
        if not isinstance(self.g, Poly):
            raise ValueError("g must be a Poly")
        if not 1 <= self.i <= self.g.n:
            raise ValueError(f"index {self.i} out of range for dimension {self.g.n}")
        if any(mono[self.i - 1] != 0 for mono in self.g.terms):
            raise ValueError(f"g may not involve x{self.i}")

    @property
    def n(self) -> int:
        return self.g.n


@dataclass(frozen=True)
class Affine:
    """X -> AX + b with det A != 0."""

    A: tuple
    b: tuple

    def __post_init__(self):
        A = tuple(tuple(Fraction(v) for v in row) for row in self.A)
        b = tuple(Fraction(v) for v in self.b)
        n = len(A)
        if n == 0 or any(len(row) != n for row in A) or len(b) != n:
            raise ValueError("need a square matrix and a matching vector")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        if mat_det(A) == 0:
            raise ValueError("affine part is singular")

    @property
    def n(self) -> int:
        return len(self.A)


Generator = Union[Diagonal, Elementary, Affine]


@dataclass(frozen=True)
class TameWord:
    """A composition G_1 o ... o G_s of generators in dimension n; the
    empty word is the identity."""

    factors: tuple
    n: int

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        for f in factors:
            if not isinstance(f, (Diagonal, Elementary, Affine)):
                raise ValueError(f"not a generator: {f!r}")
            if f.n != self.n:
                raise ValueError(
                    f"factor dimension {f.n} does not match word dimension {self.n}"
                )

    def __len__(self):
        return len(self.factors)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "factors": [_gen_to_json(f) for f in self.factors]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, doc) -> "TameWord":
        if not isinstance(doc, dict) or "n" not in doc or "factors" not in doc:
            raise ValueError("word document needs 'n' and 'factors'")
        n = doc["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        if not isinstance(doc["factors"], list):
            raise ValueError("'factors' must be a list")
        return cls(tuple(_gen_from_json(f, n) for f in doc["factors"]), n)

    @classmethod
    def from_json(cls, text: str) -> "TameWord":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(doc)


def _gen_to_json(f: Generator) -> dict:
    if isinstance(f, Elementary):
        return {"kind": "elementary", "i": f.i, "g": render_poly(f.g)}
    if isinstance(f, Diagonal):
        return {"kind": "diagonal", "c": [str(v) for v in f.c]}
    return {
        "kind": "affine",
        "A": [[str(v) for v in row] for row in f.A],
        "b": [str(v) for v in f.b],
    }


def _gen_from_json(doc, n: int) -> Generator:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError(f"not a generator document: {doc!r}")
    kind = doc["kind"]
    try:
        if kind == "elementary":
            if not isinstance(doc["i"], int):
                raise ValueError(f"'i' must be an integer, got {doc['i']!r}")
            return Elementary(doc["i"], parse_poly(doc["g"], n))
        if kind == "diagonal":
            return Diagonal(tuple(Fraction(v) for v in doc["c"]))
        if kind == "affine":
            return Affine(
                tuple(tuple(Fraction(v) for v in row) for row in doc["A"]),
                tuple(Fraction(v) for v in doc["b"]),
            )
    except KeyError as exc:
        raise ValueError(f"generator document missing field {exc}") from exc
    except TypeError as exc:
        raise ValueError(f"malformed generator document: {exc}") from exc
    raise ValueError(f"unknown generator kind {kind!r}")


# ----------------------------------------------------------------------
# words as maps

def gen_to_endo(f: Generator) -> Endo:
    n = f.n
    xs = Poly.variables(n)
    if isinstance(f, Diagonal):
        return Endo([c * x for c, x in zip(f.c, xs)])
    if isinstance(f, Elementary):
        coords = list(xs)
        coords[f.i - 1] = xs[f.i - 1] + f.g
        return Endo(coords)
    coords = []
    for i in range(n):
        acc = Poly.constant(n, f.b[i])
        for j in range(n):
            if f.A[i][j]:
                acc = acc + f.A[i][j] * xs[j]
        coords.append(acc)
    return Endo(coords)


def word_to_endo(w: TameWord) -> Endo:
    result = Endo.identity(w.n)
    for f in w.factors:
        result = result.compose(gen_to_endo(f))
    return result


def generator_determinant(f: Generator) -> Fraction:
    """Jacobian determinant contributed by one generator."""
    if isinstance(f, Elementary):
        return Fraction(1)
    if isinstance(f, Diagonal):
        prod = Fraction(1)
        for v in f.c:
            prod *= v
        return prod
    return mat_det(f.A)


# ----------------------------------------------------------------------
# inversion

def invert_generator(f: Generator) -> Generator:
    if isinstance(f, Diagonal):
        return Diagonal(tuple(1 / v for v in f.c))
    if isinstance(f, Elementary):
        return Elementary(f.i, -f.g)
    inv = mat_inverse(f.A)
    neg_b = [-v for v in mat_vec(inv, f.b)]
    return Affine(tuple(tuple(row) for row in inv), tuple(neg_b))


def invert_word(w: TameWord) -> TameWord:
    """(G_1 o ... o G_s)^{-1} = G_s^{-1} o ... o G_1^{-1}."""
    return TameWord(tuple(invert_generator(f) for f in reversed(w.factors)), w.n)


# ----------------------------------------------------------------------
# affine expansion

def _transvection(n: int, i: int, j: int, c: Fraction) -> Elementary:
    # the elementary matrix A_{i,j,c}: X_i += c*X_j
    return Elementary(i, c * Poly.variable(n, j))


def affine_to_word(f: Affine) -> TameWord:
    """Express an invertible affine map as elementaries and diagonals.

    The translation part becomes n constant elementaries; the linear part
    is reduced by Gauss-Jordan elimination, emitting the inverse of each
    row operation as a transvection, a zero pivot fixed by a row swap
    expanded as T_{i,j} = A_{i,j,1} o A_{j,i,-1} o A_{i,j,1} o D~ with
    D~ = -1 in slot i; whatever diagonal remains is the last factor.
    """
    n = f.n
    factors = []
    for i in range(n):
        if f.b[i]:
            factors.append(Elementary(i + 1, Poly.constant(n, f.b[i])))
    m = [list(row) for row in f.A]
    for k in range(n):
        r = next(r for r in range(k, n) if m[r][k] != 0)
        if r != k:
            m[k], m[r] = m[r], m[k]
            factors.extend(
                [
                    _transvection(n, k + 1, r + 1, Fraction(1)),
                    _transvection(n, r + 1, k + 1, Fraction(-1)),
                    _transvection(n, k + 1, r + 1, Fraction(1)),
                    Diagonal(
                        tuple(Fraction(-1 if l == k else 1) for l in range(n))
                    ),
                ]
            )
        for i in range(n):
            if i != k and m[i][k] != 0:
                c = m[i][k] / m[k][k]
                m[i] = [a - c * b for a, b in zip(m[i], m[k])]
                factors.append(_transvection(n, i + 1, k + 1, c))
    diag = tuple(m[k][k] for k in range(n))
    if any(v != 1 for v in diag):
        factors.append(Diagonal(diag))
    return TameWord(tuple(factors), n)


# ----------------------------------------------------------------------
# the normal form

def push_diagonal(d: Diagonal, e: Elementary) -> tuple:
    """Rewrite D o E as (E~, D) with E~ elementary in the same slot.

    g~ = c_i * g(X_1/c_1, ..., X_n/c_n); both sides add to slot i, where
    D contributes the factor c_i and E~'s addend must absorb it after the
    variables have already been scaled.  The composition identity is the
    contract and is asserted on every call.
    """
    if d.n != e.n:
        raise ValueError(f"dimension mismatch: {d.n} vs {e.n}")
    n = d.n
    scaled = [Poly.variable(n, l + 1) * (1 / d.c[l]) for l in range(n)]
    g_new = e.g.substitute(scaled) * d.c[e.i - 1]
    e_new = Elementary(e.i, g_new)
    assert gen_to_endo(d).compose(gen_to_endo(e)) == gen_to_endo(e_new).compose(
        gen_to_endo(d)
    ), "push identity D o E = E~ o D failed"
    return e_new, d


def _merge_diagonals(d1: Diagonal, d2: Diagonal) -> Diagonal:
    # D1 o D2 scales entrywise
    return Diagonal(tuple(a * b for a, b in zip(d1.c, d2.c)))


@dataclass(frozen=True)
class NormalForm:
    """E_1 o ... o E_s o D; recomposes to the word it came from."""

    elementaries: tuple
    diagonal: Diagonal

    def __post_init__(self):
        object.__setattr__(self, "elementaries", tuple(self.elementaries))
        n = self.diagonal.n
        for e in self.elementaries:
            if not isinstance(e, Elementary) or e.n != n:
                raise ValueError(f"not an elementary of dimension {n}: {e!r}")

    @property
    def n(self) -> int:
        return self.diagonal.n

    def to_word(self) -> TameWord:
        return TameWord(self.elementaries + (self.diagonal,), self.n)


def normal_form(w: TameWord) -> NormalForm:
    """Rewrite a tame word as elementaries followed by one diagonal.

    Affine factors are expanded first; diagonals are then pushed right
    through the elementaries one factor at a time (right to left), fusing
    into a single trailing diagonal.
    """
    n = w.n
    flat = []
    for f in w.factors:
        if isinstance(f, Affine):
            flat.extend(affine_to_word(f).factors)
        else:
            flat.append(f)

    elementaries = []
    diag = Diagonal(tuple(Fraction(1) for _ in range(n)))
    for f in reversed(flat):
        if isinstance(f, Diagonal):
            pushed = []
            for e in elementaries:
                e_new, f = push_diagonal(f, e)
                pushed.append(e_new)
            elementaries = pushed
            diag = _merge_diagonals(f, diag)
        else:
            elementaries.insert(0, f)
    return NormalForm(tuple(elementaries), diag)
