"""Seeded random generators shared by the test suite.

Everything takes an explicit random.Random so counted acceptance runs are
reproducible; hypothesis-based tests build their own strategies instead.
"""

from fractions import Fraction

from polyaut.linalg import mat_det
from polyaut.poly import Poly
from polyaut.tame import Affine, Diagonal, Elementary, TameWord

COEFF_POOL = [
    Fraction(v) for v in (-3, -2, -1, 1, 2, 3)
] + [Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3)]


def random_poly(rng, n, max_deg, max_terms, avoid=()):
    """Sparse polynomial; variables listed in avoid never appear."""
    usable = [j for j in range(n) if j + 1 not in avoid]
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = [0] * n
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            if usable:
                mono[rng.choice(usable)] += 1
        terms[tuple(mono)] = rng.choice(COEFF_POOL)
    return Poly(n, terms)


def random_elementary(rng, n, max_deg, max_terms=3) -> Elementary:
    i = rng.randint(1, n)
    return Elementary(i, random_poly(rng, n, max_deg, max_terms, avoid=(i,)))


def random_diagonal(rng, n) -> Diagonal:
    pool = [Fraction(v) for v in (-3, -2, -1, 1, 2, 3)] + [
        Fraction(1, 2), Fraction(-1, 3),
    ]
    return Diagonal(tuple(rng.choice(pool) for _ in range(n)))


def random_affine(rng, n, span=5) -> Affine:
    """Invertible integer matrix with entries in [-span, span], plus an
    integer translation part."""
    while True:
        a = tuple(
            tuple(Fraction(rng.randint(-span, span)) for _ in range(n))
            for _ in range(n)
        )
        if mat_det(a) != 0:
            break
    b = tuple(Fraction(rng.randint(-span, span)) for _ in range(n))
    return Affine(a, b)


def random_word(rng, n, max_len, max_deg=3) -> TameWord:
    factors = []
    for _ in range(rng.randint(0, max_len)):
        kind = rng.choice(("elementary", "elementary", "diagonal", "affine"))
        if kind == "elementary":
            factors.append(random_elementary(rng, n, max_deg))
        elif kind == "diagonal":
            factors.append(random_diagonal(rng, n))
        else:
            factors.append(random_affine(rng, n))
    return TameWord(tuple(factors), n)
