"""Locally finite automorphisms: certification, minimal polynomials,
inversion, reversal, conjugation.

A map G is certified locally finite by exhibiting a nonzero univariate
relation a_d G^{od} + ... + a_1 G + a_0 I = 0.  We search for the first
linear dependence among the iterates I, G, G^{o2}, ... flattened to exact
rational vectors over the union monomial basis (one block per coordinate).
Because earlier iterates stay independent until the first dependence, the
relation found is automatically the monic minimal polynomial.

Degree growth is the enemy: for Henon-type maps deg(G^{om}) doubles each
step and the iterates themselves become astronomically large long before
the degree budget trips.  The certifier therefore tracks each iterate's
per-coordinate degree and top form (leading homogeneous part), which
compose exactly as long as no cancellation occurs in the top degree, and
materializes full iterates only on demand.  Two facts make this sound:

  * an iterate whose degree strictly exceeds every earlier iterate's
    degree cannot take part in a first linear dependence (compare top
    homogeneous parts), so elimination may skip it;
  * a dependence can therefore only appear when the degree sequence
    plateaus or drops, and at that point the skipped iterates are
    materialized and fed to the elimination in order.

So on budget-exceeding inputs only degrees and top forms are ever
computed, never the doubling iterates themselves.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .endo import Endo, linear_combination, verify_inverse_pair
from .linalg import DependenceFinder
from .poly import NEG_INF, Poly, Rational


class InconsistencyError(ValueError):
    """The data contradicts the claim it was supposed to certify."""


class UniPoly:
    """A nonzero univariate polynomial a_0 + a_1 T + ... + a_d T^d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Rational]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            raise ValueError("the zero polynomial is not allowed here")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def monic(self) -> "UniPoly":
        if self.is_monic:
            return self
        lead = self.leading
        return UniPoly([c / lead for c in self.coeffs])

    def __call__(self, t: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        pieces = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                t = "T" if e == 1 else f"T^{e}"
                body = t if mag == 1 else f"{mag}*{t}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def to_coeff_strings(self) -> list:
        """Exact coefficients a_0..a_d as strings, constant term first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, strings: Sequence[str]) -> "UniPoly":
        return cls([Fraction(s) for s in strings])


@dataclass(frozen=True)
class LFReport:
    """Outcome of lf_certify.

    verdict is "CertifiedLF" or "Unknown"; Unknown is never a claim of
    non-local-finiteness, only budget exhaustion with the degree sequence
    as evidence.  iterate_degrees[m] = deg(G^{om}) for every iterate
    examined (NEG_INF for a zero iterate).
    """

    verdict: str
    minimal_polynomial: Optional[UniPoly]
    iterate_degrees: tuple
    budget_used: tuple  # (iterates computed, max degree encountered)

    @property
    def certified(self) -> bool:
        return self.verdict == "CertifiedLF"

    def to_json_dict(self) -> dict:
        mu = self.minimal_polynomial
        return {
            "verdict": self.verdict,
            "minimal_polynomial": None if mu is None else mu.to_coeff_strings(),
            "iterate_degrees": [
                None if d == NEG_INF else d for d in self.iterate_degrees
            ],
            "budget_used": {
                "iterations": self.budget_used[0],
                "max_degree": self.budget_used[1],
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


# ----------------------------------------------------------------------
# lazy iterate bookkeeping

class _IterState:
    """Per-coordinate degrees and top forms of one iterate; the full value
    only when someone needed it."""

    __slots__ = ("degrees", "tops", "value")

    def __init__(self, degrees, tops, value):
        self.degrees = degrees
        self.tops = tops
        self.value = value

    @classmethod
    def from_endo(cls, g: Endo) -> "_IterState":
        return cls(
            tuple(c.total_degree() for c in g.coords),
            tuple(c.top_form() for c in g.coords),
            g,
        )

    @property
    def degree(self):
        return max(self.degrees)


def _compose_leading(g: Endo, prev: _IterState):
    """Exact degrees and top forms of g o prev from prev's top forms alone.

    Coordinate i of the composition is g_i(prev_1, ..., prev_n); a monomial
    c*X^alpha contributes degree sum(alpha_j * deg prev_j), and only the
    maximal-degree monomials reach the top, where they compose through the
    top forms.  Returns None when the candidate tops cancel (then the true
    degree is smaller and only full composition can tell).
    """
    n = g.n
    ambient = prev.tops[0].n
    degrees, tops = [], []
    for gi in g.coords:
        best = NEG_INF
        for mono in gi.terms:
            d = 0
            for j, a in enumerate(mono):
                if a == 0:
                    continue
                dj = prev.degrees[j]
                if dj == NEG_INF:
                    break  # factor is zero, monomial dies
                d += a * dj
            else:
                if d > best:
                    best = d
        if best == NEG_INF:
            degrees.append(NEG_INF)
            tops.append(Poly.zero(ambient))
            continue
        acc = Poly.zero(ambient)
        for mono, c in gi.terms.items():
            d = 0
            for j, a in enumerate(mono):
                if a == 0:
                    continue
                dj = prev.degrees[j]
                if dj == NEG_INF:
                    break
                d += a * dj
            else:
                if d == best:
                    term = Poly.constant(ambient, c)
                    for j, a in enumerate(mono):
                        if a:
                            term = term * prev.tops[j] ** a
                    acc = acc + term
        if acc.is_zero:
            return None
        degrees.append(best)
        tops.append(acc)
    return tuple(degrees), tuple(tops)


def _materialize(states, k: int, g: Endo):
    """Fill in states[k].value, composing up the chain as needed."""
    if states[k].value is not None:
        return
    _materialize(states, k - 1, g)
    value = g.compose(states[k - 1].value)
    # the lazily computed degree certificate must agree with reality
    assert tuple(c.total_degree() for c in value.coords) == states[k].degrees
    states[k].value = value


def _flatten(g: Endo) -> dict:
    return {
        (i, mono): c
        for i, p in enumerate(g.coords)
        for mono, c in p.terms.items()
    }


def _finite_max(degrees):
    finite = [d for d in degrees if d != NEG_INF]
    return max(finite) if finite else 0


# ----------------------------------------------------------------------
# certification

def lf_certify(g: Endo, max_iter: int = 16, max_deg: int = 512) -> LFReport:
    """Search for the minimal polynomial of g within an iteration and
    degree budget.

    CertifiedLF comes with the monic minimal polynomial, re-verified
    internally as an exact zero map.  Unknown means the budget ran out
    (an iterate degree exceeded max_deg, or max_iter iterates brought no
    dependence); it never asserts that g is not locally finite.
    """
    if not isinstance(max_iter, int) or max_iter < 1:
        raise ValueError(f"max_iter must be a positive integer, got {max_iter!r}")
    if not isinstance(max_deg, int) or max_deg < 1:
        raise ValueError(f"max_deg must be a positive integer, got {max_deg!r}")

    states = [_IterState.from_endo(Endo.identity(g.n))]
    degree_seq = [states[0].degree]
    running_max = states[0].degree
    finder = DependenceFinder()
    finder.add(_flatten(states[0].value))
    added = 1  # iterates 0..added-1 sit in the finder

    for m in range(1, max_iter + 1):
        lead = _compose_leading(g, states[m - 1])
        if lead is None:
            # top-degree cancellation: only the real composition knows
            _materialize(states, m - 1, g)
            value = g.compose(states[m - 1].value)
            states.append(_IterState.from_endo(value))
        else:
            states.append(_IterState(lead[0], lead[1], None))
        d = states[m].degree
        degree_seq.append(d)

        if d != NEG_INF and d > max_deg:
            return LFReport(
                "Unknown", None, tuple(degree_seq), (m, _finite_max(degree_seq))
            )
        if d != NEG_INF and d > running_max:
            # strictly growing degree: provably independent of all earlier
            # iterates, elimination safely skipped
            running_max = d
            continue

        for k in range(added, m + 1):
            _materialize(states, k, g)
            combo = finder.add(_flatten(states[k].value))
            added += 1
            if combo is not None:
                # only the newest iterate can close the first dependence;
                # backfilled ones had strictly maximal degree when skipped
                assert k == m, "dependence during backfill"
                coeffs = [Fraction(0)] * (m + 1)
                for idx, c in combo.items():
                    coeffs[idx] = c
                mu = UniPoly(coeffs)
                assert mu.is_monic
                witness = linear_combination(
                    mu.coeffs, [states[j].value for j in range(m + 1)]
                )
                assert witness.is_zero_map, "certified relation failed to vanish"
                return LFReport(
                    "CertifiedLF", mu, tuple(degree_seq),
                    (m, _finite_max(degree_seq)),
                )

    return LFReport(
        "Unknown", None, tuple(degree_seq), (max_iter, _finite_max(degree_seq))
    )


def verify_vanishing(g: Endo, p: UniPoly) -> bool:
    """Exact check that p(g) = a_d g^{od} + ... + a_1 g + a_0 I is the
    zero map."""
    iterates = [Endo.identity(g.n)]
    for _ in range(p.degree):
        iterates.append(g.compose(iterates[-1]))
    return linear_combination(p.coeffs, iterates).is_zero_map


def minimality_certificate(g: Endo, mu: UniPoly) -> bool:
    """True iff no relation of degree below deg(mu) vanishes on g,
    i.e. the iterates I, g, ..., g^{o(d-1)} are linearly independent."""
    finder = DependenceFinder()
    current = Endo.identity(g.n)
    for k in range(mu.degree):
        if finder.add(_flatten(current)) is not None:
            return False
        if k + 1 < mu.degree:
            current = g.compose(current)
    return True


# ----------------------------------------------------------------------
# consequences of a vanishing polynomial

def inverse_from_minpoly(g: Endo, mu: UniPoly) -> Endo:
    """The inverse of g read off from a vanishing polynomial with
    mu(0) != 0.

    From sum a_m g^{om} = 0, composing with g^{-1} on the right (pointwise
    linear combinations distribute over right composition) gives
    g^{-1} = -(1/a_0) * sum_{m>=1} a_m g^{o(m-1)}.
    """
    if not verify_vanishing(g, mu):
        raise ValueError("the given polynomial does not vanish on the map")
    if mu.coeffs[0] == 0:
        raise InconsistencyError(
            "vanishing polynomial has zero constant term; for an automorphism "
            "the minimal polynomial never does, so this map cannot be one"
        )
    iterates = [Endo.identity(g.n)]
    for _ in range(mu.degree - 1):
        iterates.append(g.compose(iterates[-1]))
    a0 = mu.coeffs[0]
    inv = linear_combination(
        [-(c / a0) for c in mu.coeffs[1:]], iterates
    )
    assert verify_inverse_pair(g, inv)
    return inv


def reversal(p: UniPoly) -> UniPoly:
    """T^d p(1/T), normalized monic; the vanishing polynomial of the
    inverse map.  Needs p(0) != 0."""
    if p.coeffs[0] == 0:
        raise ValueError("reversal needs a nonzero constant term")
    return UniPoly(tuple(reversed(p.coeffs))).monic()


def conjugate(phi: Endo, phi_inv: Endo, g: Endo) -> Endo:
    """phi o g o phi_inv, with the inverse pair checked first."""
    if not verify_inverse_pair(phi, phi_inv):
        raise ValueError("phi and phi_inv are not a verified inverse pair")
    return phi.compose(g).compose(phi_inv)
