"""Local finiteness certification, minimal polynomials, inversion,
reversal, conjugation."""

import random
from fractions import Fraction

import pytest

from polyaut.endo import Endo, identity, iterate, verify_inverse_pair
from polyaut.locfin import (
    InconsistencyError,
    LFReport,
    UniPoly,
    conjugate,
    inverse_from_minpoly,
    lf_certify,
    minimality_certificate,
    reversal,
    verify_vanishing,
)
from polyaut.poly import NEG_INF, Poly
from polyaut.textio import parse_map
from polyaut.witness import nagata, nagata_inverse

Q = Fraction


def shear():
    return parse_map("x1 + x2^2, x2", 2)


def diag23():
    return parse_map("2*x1, 3*x2", 2)


def henon():
    return parse_map("x2, x1 + x2^2", 2)


# ----------------------------------------------------------------------
# UniPoly basics

def test_unipoly_normalization():
    p = UniPoly([1, -2, 1, 0, 0])
    assert p.degree == 2 and p.coeffs == (1, -2, 1)
    with pytest.raises(ValueError):
        UniPoly([0, 0])
    with pytest.raises(ValueError):
        UniPoly([])


def test_unipoly_evaluation_and_monic():
    p = UniPoly([6, -5, 1])  # (T-2)(T-3)
    assert p(2) == 0 and p(3) == 0 and p(0) == 6
    q = UniPoly([2, 0, 4])
    assert not q.is_monic
    assert q.monic() == UniPoly([Q(1, 2), 0, 1])
    assert q.monic().is_monic


def test_unipoly_str():
    assert str(UniPoly([6, -5, 1])) == "T^2 - 5*T + 6"
    assert str(UniPoly([-1, 1])) == "T - 1"
    assert str(UniPoly([0, Q(1, 2)])) == "1/2*T"
    assert str(UniPoly([3])) == "3"
    assert str(UniPoly([0, -1])) == "-T"


def test_unipoly_coeff_strings_round_trip():
    p = UniPoly([Q(1, 6), Q(-5, 6), 1])
    assert p.to_coeff_strings() == ["1/6", "-5/6", "1"]
    assert UniPoly.from_coeff_strings(p.to_coeff_strings()) == p


def test_unipoly_immutable():
    p = UniPoly([1, 1])
    with pytest.raises(AttributeError):
        p.coeffs = ()


# ----------------------------------------------------------------------
# certification: the pinned examples

def test_certify_identity():
    r = lf_certify(identity(3))
    assert r.certified
    assert r.minimal_polynomial == UniPoly([-1, 1])
    assert r.iterate_degrees == (1, 1)


def test_certify_shear():
    r = lf_certify(shear())
    assert r.certified
    assert r.minimal_polynomial == UniPoly([1, -2, 1])  # (T-1)^2
    assert r.iterate_degrees == (1, 2, 2)


def test_certify_diagonal():
    r = lf_certify(diag23())
    assert r.certified
    assert r.minimal_polynomial == UniPoly([6, -5, 1])  # roots 2, 3


def test_certify_nagata():
    r = lf_certify(nagata())
    assert r.certified
    assert r.minimal_polynomial == UniPoly([-1, 3, -3, 1])  # (T-1)^3
    assert r.iterate_degrees == (1, 5, 5, 5)


def test_certify_henon_budget_exhaustion():
    r = lf_certify(henon())
    assert r.verdict == "Unknown"
    assert r.minimal_polynomial is None
    # doubling degree sequence, with the budget-breaking degree included
    assert r.iterate_degrees == (1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024)
    assert r.budget_used == (10, 1024)


def test_certify_henon_is_fast():
    # the doubling iterates are never materialized, only their top forms
    import time

    t0 = time.perf_counter()
    lf_certify(henon())
    assert time.perf_counter() - t0 < 0.5


def test_iteration_budget():
    r = lf_certify(shear(), max_iter=1)
    assert r.verdict == "Unknown"
    assert r.iterate_degrees == (1, 2)
    r = lf_certify(shear(), max_iter=2)
    assert r.certified


def test_degree_budget():
    r = lf_certify(shear(), max_deg=1)
    assert r.verdict == "Unknown"
    assert r.iterate_degrees == (1, 2)


def test_budget_validation():
    with pytest.raises(ValueError):
        lf_certify(shear(), max_iter=0)
    with pytest.raises(ValueError):
        lf_certify(shear(), max_deg=0)


def test_certify_zero_map():
    g = Endo([Poly.zero(1)])
    r = lf_certify(g)
    assert r.certified
    assert r.minimal_polynomial == UniPoly([0, 1])  # mu = T
    assert r.iterate_degrees == (1, NEG_INF)


def test_certify_conjugated_diagonal_needs_backfill():
    # shear-conjugated diag(2,3): (2*x1 + 7*x2^2, 3*x2); all iterates have
    # degree 2, so iterate 1 is skipped and later backfilled, and the
    # minimal polynomial gains the eigenvalue 9 = 3^2 from the y^2 slot
    g = parse_map("2*x1 + 7*x2^2, 3*x2", 2)
    r = lf_certify(g)
    assert r.certified
    # (T-2)(T-3)(T-9)
    assert r.minimal_polynomial == UniPoly([-54, 51, -14, 1])
    assert minimality_certificate(g, r.minimal_polynomial)


def test_report_json():
    r = lf_certify(shear())
    doc = r.to_json_dict()
    assert doc["verdict"] == "CertifiedLF"
    assert doc["minimal_polynomial"] == ["1", "-2", "1"]
    assert doc["iterate_degrees"] == [1, 2, 2]
    assert doc["budget_used"] == {"iterations": 2, "max_degree": 2}
    u = lf_certify(henon()).to_json_dict()
    assert u["minimal_polynomial"] is None


# ----------------------------------------------------------------------
# vanishing and minimality

def test_verify_vanishing():
    assert verify_vanishing(identity(2), UniPoly([-1, 1]))
    assert verify_vanishing(shear(), UniPoly([1, -2, 1]))
    assert not verify_vanishing(shear(), UniPoly([-2, 1]))  # T - 2
    # multiples of the minimal polynomial vanish too: (T-1)^3
    assert verify_vanishing(shear(), UniPoly([-1, 3, -3, 1]))


def test_minimality_certificate():
    assert minimality_certificate(identity(2), UniPoly([-1, 1]))
    assert minimality_certificate(shear(), UniPoly([1, -2, 1]))
    assert not verify_vanishing(shear(), UniPoly([-1, 1]))
    # (T-2)(T-3)(T-1) vanishes on diag(2,3) but is not minimal
    over = UniPoly([-6, 11, -6, 1])
    assert verify_vanishing(diag23(), over)
    assert not minimality_certificate(diag23(), over)


def test_certified_reports_self_consistent():
    for g in (identity(2), shear(), diag23(), nagata()):
        r = lf_certify(g)
        assert verify_vanishing(g, r.minimal_polynomial)
        assert minimality_certificate(g, r.minimal_polynomial)


# ----------------------------------------------------------------------
# inversion from the minimal polynomial

def test_invert_shear():
    inv = inverse_from_minpoly(shear(), UniPoly([1, -2, 1]))
    assert inv == parse_map("x1 - x2^2, x2", 2)


def test_invert_scalar():
    g = parse_map("2*x1", 1)
    inv = inverse_from_minpoly(g, UniPoly([-2, 1]))
    assert inv == Endo([Fraction(1, 2) * Poly.variable(1, 1)])


def test_invert_nagata_matches_formula():
    inv = inverse_from_minpoly(nagata(), UniPoly([-1, 3, -3, 1]))
    assert inv == nagata_inverse()


def test_invert_rejects_non_vanishing():
    with pytest.raises(ValueError):
        inverse_from_minpoly(shear(), UniPoly([-2, 1]))


def test_invert_flags_zero_constant_term():
    g = Endo([Poly.zero(1)])
    with pytest.raises(InconsistencyError):
        inverse_from_minpoly(g, UniPoly([0, 1]))


# ----------------------------------------------------------------------
# reversal

def test_reversal_values():
    assert reversal(UniPoly([1, -2, 1])) == UniPoly([1, -2, 1])  # palindromic
    assert reversal(UniPoly([-2, 1])) == UniPoly([Q(-1, 2), 1])  # T - 1/2
    assert reversal(UniPoly([6, -5, 1])) == UniPoly([Q(1, 6), Q(-5, 6), 1])


def test_reversal_needs_nonzero_constant():
    with pytest.raises(ValueError):
        reversal(UniPoly([0, 1]))


def test_reversal_duality_on_known_inverses():
    pairs = [
        (shear(), parse_map("x1 - x2^2, x2", 2)),
        (diag23(), parse_map("1/2*x1, 1/3*x2", 2)),
        (nagata(), nagata_inverse()),
    ]
    for g, g_inv in pairs:
        assert verify_inverse_pair(g, g_inv)
        mu = lf_certify(g).minimal_polynomial
        mu_inv = lf_certify(g_inv).minimal_polynomial
        assert mu_inv == reversal(mu)


# ----------------------------------------------------------------------
# conjugation

def test_conjugate_by_identity():
    assert conjugate(identity(2), identity(2), shear()) == shear()


def test_conjugate_examples():
    phi = parse_map("2*x1, x2", 2)
    phi_inv = parse_map("1/2*x1, x2", 2)
    assert conjugate(phi, phi_inv, shear()) == parse_map("x1 + 2*x2^2, x2", 2)
    swap = parse_map("x2, x1", 2)
    assert conjugate(swap, swap, shear()) == parse_map("x1, x2 + x1^2", 2)


def test_conjugate_rejects_bad_pair():
    with pytest.raises(ValueError):
        conjugate(shear(), shear(), identity(2))


def test_conjugation_degree_bound_and_lf_preservation():
    rng = random.Random(7)
    g = shear()
    r = lf_certify(g)
    d = max(r.iterate_degrees)
    for _ in range(5):
        c = rng.choice([Q(2), Q(-1), Q(1, 2)])
        phi = parse_map(f"x1 + {abs(c)}*x2^2, x2", 2) if c > 0 else parse_map(
            f"x1 - {abs(c)}*x2^2, x2", 2
        )
        phi_inv = inverse_from_minpoly(phi, lf_certify(phi).minimal_polynomial)
        conj = conjugate(phi, phi_inv, g)
        dp, dq = phi.degree(), phi_inv.degree()
        for m in range(9):
            assert iterate(conj, m).degree() <= dp * iterate(g, m).degree() * dq
        r2 = lf_certify(conj, max_deg=dp * d * dq)
        assert r2.certified
