"""
Certifying locally finite maps and inverting them
=================================================

A polynomial self-map G is locally finite when its iterates stay inside
a finite-dimensional space, equivalently when some monic mu(T) satisfies
mu(G) = 0 with iterates in place of powers. The certifier walks
G^0, G^1, G^2, ... and stops at the first linear dependence; that
dependence IS the minimal polynomial, and its constant term hands you
the inverse for free:

    G^-1 = -(1/a_0) * (a_1 G^0 + a_2 G^1 + ... + a_d G^(d-1)).
"""

from polyaut import (
    inverse_from_minpoly,
    lf_certify,
    minimality_certificate,
    parse_map,
    render_map,
    reversal,
    verify_vanishing,
)
from polyaut.witness import nagata, nagata_inverse

# A triangular shear: (T-1)^2 kills it, one step short of naive guesses.
shear = parse_map("X + Y^2, Y", 2)
rep = lf_certify(shear)
print("shear:", rep.verdict, " mu =", rep.minimal_polynomial)
print("  iterate degrees:", rep.iterate_degrees)
print("  vanishes:", verify_vanishing(shear, rep.minimal_polynomial),
      " minimal:", minimality_certificate(shear, rep.minimal_polynomial))

# Diagonal maps have squarefree mu with the eigenvalues as roots.
diag = parse_map("2*X, 3*Y", 2)
print("\ndiag(2,3):", lf_certify(diag).minimal_polynomial)

# The degree-5 automorphism is unipotent: (T-1)^3, like a 3x3 Jordan
# block, even though its coordinates are quintic.
rep_n = lf_certify(nagata())
print("nagata:", rep_n.minimal_polynomial, " degrees:", rep_n.iterate_degrees)

inv = inverse_from_minpoly(nagata(), rep_n.minimal_polynomial)
print("recovered inverse matches the closed form:", inv == nagata_inverse())
print("  F^-1 =", render_map(inv))

# The inverse's minimal polynomial is the reversal (coefficient flip,
# then monic normalization): eigenvalues get reciprocated.
rep_d = lf_certify(diag)
rep_d_inv = lf_certify(parse_map("1/2*X, 1/3*Y", 2))
print("\nmu of diag inverse:", rep_d_inv.minimal_polynomial)
print("reversal of mu    :", reversal(rep_d.minimal_polynomial))

# A map that is NOT locally finite: the Henon-like swap-shear. Iterate
# degrees double forever, so the certifier reports Unknown once the
# degree budget is passed, without ever expanding the big iterates.
henon = parse_map("Y, X + Y^2", 2)
rep_h = lf_certify(henon)
print("\nhenon:", rep_h.verdict)
print("  degrees seen:", rep_h.iterate_degrees)
print("  budget used (iterates, max degree):", rep_h.budget_used)
