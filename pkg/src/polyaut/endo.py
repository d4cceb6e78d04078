"""Polynomial endomorphisms of affine n-space.

An endomorphism is an n-tuple of dimension-n polynomials.  Composition is
total substitution: (F o G)_i = F_i(G_1, ..., G_n), so F o G means "apply G
first".  Everything here is exact; two endomorphisms are equal iff their
canonical coordinate polynomials are identical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import NEG_INF, Poly, Rational


class Endo:
    """A polynomial endomorphism G = (G_1, ..., G_n) of k^n."""

    __slots__ = ("n", "coords")

    def __init__(self, coords: Sequence[Poly]):
        coords = tuple(coords)
        if not coords:
            raise ValueError("an endomorphism needs at least one coordinate")
        n = coords[0].n
        if len(coords) != n or any(p.n != n for p in coords):
            raise ValueError(
                f"need exactly n coordinates of dimension n, got {len(coords)} "
                f"of dimensions {[p.n for p in coords]}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Endo is immutable")

    @classmethod
    def identity(cls, n: int) -> "Endo":
        return cls(Poly.variables(n))

    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Endo):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Endo({list(self.coords)!r})"

    def __str__(self):
        from .textio import render_map

        return render_map(self)

    @property
    def is_zero_map(self) -> bool:
        return all(p.is_zero for p in self.coords)

    def is_identity(self) -> bool:
        return self == Endo.identity(self.n)

    # ------------------------------------------------------------------

    def compose(self, other: "Endo") -> "Endo":
        """Composition self o other (other is applied first)."""
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return Endo([p.substitute(other.coords) for p in self.coords])

    def iterate(self, m: int) -> "Endo":
        """The m-th iterate; iterate(0) is the identity.

        Sequential composition on purpose: callers that need the whole
        prefix of iterates get them at the same total cost.
        """
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"iteration count must be a non-negative integer, got {m!r}")
        result = Endo.identity(self.n)
        for _ in range(m):
            result = self.compose(result)
        return result

    def degree(self):
        """max_i deg G_i; NEG_INF for the zero map."""
        return max(p.total_degree() for p in self.coords)

    def jacobian_matrix(self) -> "SquareMatrixPoly":
        """The matrix of partial derivatives (dG_i / dx_j)."""
        n = self.n
        return SquareMatrixPoly(
            [[p.partial_derivative(j) for j in range(1, n + 1)] for p in self.coords]
        )

    def jacobian_det(self) -> Poly:
        return self.jacobian_matrix().det()


class SquareMatrixPoly:
    """A square grid of polynomials sharing one ambient dimension."""

    __slots__ = ("size", "rows")

    def __init__(self, rows: Sequence[Sequence[Poly]]):
        rows = tuple(tuple(r) for r in rows)
        size = len(rows)
        if size == 0 or any(len(r) != size for r in rows):
            raise ValueError("matrix must be square and nonempty")
        dim = rows[0][0].n
        if any(p.n != dim for r in rows for p in r):
            raise ValueError("matrix entries have mixed dimensions")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SquareMatrixPoly is immutable")

    def __eq__(self, other):
        if not isinstance(other, SquareMatrixPoly):
            return NotImplemented
        return self.rows == other.rows

    def det(self) -> Poly:
        """Exact symbolic determinant.

        Cofactor expansion up to 4x4; beyond that, fraction-free (Bareiss)
        row reduction whose divisions are exact polynomial divisions, so no
        rational-function arithmetic is ever needed.
        """
        if self.size <= 4:
            return _det_cofactor(self.rows, list(range(self.size)))
        return _det_bareiss(self.rows)


def _det_cofactor(rows, cols) -> Poly:
    dim = rows[0][0].n
    i = len(rows) - len(cols)  # expand along row i
    if len(cols) == 1:
        return rows[i][cols[0]]
    total = Poly.zero(dim)
    for k, c in enumerate(cols):
        entry = rows[i][c]
        if entry.is_zero:
            continue
        minor = _det_cofactor(rows, cols[:k] + cols[k + 1:])
        term = entry * minor
        total = total - term if k % 2 else total + term
    return total


def _det_bareiss(rows) -> Poly:
    n = len(rows)
    dim = rows[0][0].n
    m = [list(r) for r in rows]
    sign = 1
    prev = Poly.constant(dim, 1)
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if not m[r][k].is_zero), None)
        if piv is None:
            return Poly.zero(dim)
        if piv != k:
            m[piv], m[k] = m[k], m[piv]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.divide_exact(prev)
            m[i][k] = Poly.zero(dim)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


# ----------------------------------------------------------------------
# module-level operations

def identity(n: int) -> Endo:
    """The identity map (x_1, ..., x_n)."""
    return Endo.identity(n)


def compose(f: Endo, g: Endo) -> Endo:
    """f o g (g applied first)."""
    return f.compose(g)


def iterate(g: Endo, m: int) -> Endo:
    """The m-th iterate of g."""
    return g.iterate(m)


def degree(g: Endo):
    """max coordinate total degree of g."""
    return g.degree()


def jacobian_matrix(g: Endo) -> SquareMatrixPoly:
    return g.jacobian_matrix()


def jacobian_det(g: Endo) -> Poly:
    return g.jacobian_det()


def equals(f: Endo, g: Endo) -> bool:
    """Exact equality of canonical coordinates (False on dimension mismatch)."""
    return isinstance(f, Endo) and isinstance(g, Endo) and f == g


def linear_combination(coeffs: Sequence[Rational], maps: Sequence[Endo]) -> Endo:
    """Coordinatewise rational linear combination sum_k coeffs[k] * maps[k]."""
    coeffs = [Fraction(c) for c in coeffs]
    maps = list(maps)
    if not maps or len(coeffs) != len(maps):
        raise ValueError(
            f"need equally many coefficients and maps (>= 1), got {len(coeffs)} and {len(maps)}"
        )
    n = maps[0].n
    if any(g.n != n for g in maps):
        raise ValueError("maps have mixed dimensions")
    coords = []
    for i in range(n):
        acc = Poly.zero(n)
        for c, g in zip(coeffs, maps):
            if c:
                acc = acc + g.coords[i] * c
        coords.append(acc)
    return Endo(coords)


def verify_inverse_pair(f: Endo, g: Endo) -> bool:
    """True iff f o g and g o f are both the identity."""
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: {f.n} vs {g.n}")
    ident = Endo.identity(f.n)
    return f.compose(g) == ident and g.compose(f) == ident
