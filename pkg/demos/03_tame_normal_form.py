"""
Rewriting tame words into (elementaries..., diagonal)
=====================================================

Tame automorphisms arrive as words in affine and elementary generators.
Every such word can be rewritten as a chain of elementary maps followed
by a single diagonal: affines expand through Gauss-Jordan into
transvections (row swaps cost four factors, not a new generator kind),
and diagonals commute past elementaries by rescaling the attached
polynomial.
"""

from fractions import Fraction

from polyaut import render_map
from polyaut.tame import (
    Affine,
    Diagonal,
    Elementary,
    TameWord,
    affine_to_word,
    invert_word,
    normal_form,
    push_diagonal,
    word_to_endo,
)
from polyaut.textio import parse_poly

# The mechanism that drives everything: pushing a diagonal through an
# elementary divides the inserted polynomial by the right eigenvalue
# ratio. D o E = E~ o D with E~ rescaled, never a new kind of factor.
d = Diagonal((Fraction(2), Fraction(1)))
e = Elementary(2, parse_poly("x1^2", 2))
e_tilde, _ = push_diagonal(d, e)
print("push (2X, Y) through (X, Y + X^2):", e_tilde.g, "attached at", e_tilde.i)

# An affine map decomposes into transvections; the swap needs the
# classic 4-factor trick since pure permutations are not elementary.
swap = Affine(((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))),
              (Fraction(0), Fraction(0)))
for factor in affine_to_word(swap).to_json_dict()["factors"]:
    print("  ", factor)

# Now a full word: diagonal, then a shear, then an affine translation.
word = TameWord((
    Diagonal((Fraction(2), Fraction(1))),
    Elementary(2, parse_poly("x1^2", 2)),
    Affine(((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))),
           (Fraction(3), Fraction(-1))),
), 2)
g = word_to_endo(word)
print("\nword composes to:", render_map(g))

nf = normal_form(word)
print("normal form factors:")
for factor in nf.to_word().to_json_dict()["factors"]:
    print("  ", factor)
print("recomposes exactly:", word_to_endo(nf.to_word()) == g)

# Words invert factor by factor in reverse order, so the group
# structure stays visible the whole time.
inv = invert_word(word)
print("\nword o word^-1 =", render_map(word_to_endo(TameWord(word.factors + inv.factors, 2))))

# Serialization round trip: words travel as JSON documents.
blob = word.to_json()
print("\nJSON:", blob)
print("round trip ok:", TameWord.from_json(blob) == word)
