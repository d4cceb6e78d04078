"""Exact linear algebra over the rationals.

Small dense routines for matrices given as lists of Fraction rows, plus an
incremental sparse dependence finder used by the minimal-polynomial search.
No floating point anywhere; every pivot decision is a deterministic
"first nonzero entry" choice.
"""

from __future__ import annotations

from fractions import Fraction


def mat_det(rows) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[piv], m[col] = m[col], m[piv]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def mat_inverse(rows):
    """Inverse matrix; raises ValueError if singular."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    aug = [a[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        if piv != col:
            aug[piv], aug[col] = aug[col], aug[piv]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_vec(rows, vec):
    return [sum((a * v for a, v in zip(row, vec)), Fraction(0)) for row in rows]


class DependenceFinder:
    """Incremental search for a rational linear dependence among vectors.

    Vectors are sparse maps {key: Fraction} over an arbitrary growing key
    space (keys only need a total order).  Vectors are fed in one at a time;
    `add` returns None while they stay independent, and the first time the
    new vector is a combination of the earlier ones it returns that
    combination as {vector_index: coefficient} with coefficient 1 on the
    newest vector.

    Internally keeps a reduced echelon basis, each basis row paired with its
    expression in the original vectors, so the reported dependence is exact
    and needs no back-substitution pass.
    """

    def __init__(self):
        self._rows = []  # (pivot_key, row_dict, combo_dict)
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def vectors_seen(self) -> int:
        return self._count

    def add(self, vec):
        work = {k: Fraction(v) for k, v in vec.items() if v}
        combo = {self._count: Fraction(1)}
        self._count += 1
        for pivot, row, rcombo in self._rows:
            f = work.get(pivot)
            if not f:
                continue
            _sub_scaled(work, row, f)
            _sub_scaled(combo, rcombo, f)
        if not work:
            return combo
        pivot = min(work)
        inv = 1 / work[pivot]
        if inv != 1:
            work = {k: v * inv for k, v in work.items()}
            combo = {k: v * inv for k, v in combo.items()}
        # keep the basis fully reduced: clear the new pivot from old rows
        for entry in self._rows:
            f = entry[1].get(pivot)
            if f:
                _sub_scaled(entry[1], work, f)
                _sub_scaled(entry[2], combo, f)
        self._rows.append((pivot, work, combo))
        return None


def _sub_scaled(target: dict, source: dict, factor: Fraction):
    # target -= factor * source, dropping exact zeros
    for k, v in source.items():
        s = target.get(k, 0) - factor * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)
