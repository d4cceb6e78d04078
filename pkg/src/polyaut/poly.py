"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial in n variables is a finite map from monomials to nonzero
rational coefficients.  A monomial is a plain tuple of n non-negative
integer exponents, so

    x1^2 * x3  in dimension 3   ->   (2, 0, 1)

and the polynomial  x1^2*x3 - 2/3  is stored as

    {(2, 0, 1): Fraction(1), (0, 0, 0): Fraction(-2, 3)}

The zero polynomial is the empty map.  All coefficients are
`fractions.Fraction`, so every operation in this module is exact and
polynomial identity testing is reliable.  Values are immutable after
construction; all operations build new objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple  # exponent tuple, one entry per variable
Rational = Union[int, Fraction]

#: Total degree of the zero polynomial: a sentinel below every integer.
NEG_INF = float("-inf")

# Above this many coefficient products, mul() switches to an integer
# convolution (clear denominators, multiply ints, divide once at the end).
# Fraction arithmetic re-normalizes on every operation and is roughly an
# order of magnitude slower in the hot loop.
_INT_MUL_THRESHOLD = 2000


def monomial_degree(mono: Monomial) -> int:
    """Total degree of an exponent tuple."""
    return sum(mono)


def _validated_terms(n: int, terms: Mapping[Monomial, Rational]) -> dict:
    clean = {}
    for mono, coeff in terms.items():
        if not isinstance(mono, tuple) or len(mono) != n:
            raise ValueError(f"monomial {mono!r} does not have dimension {n}")
        if any((not isinstance(e, int)) or e < 0 for e in mono):
            raise ValueError(f"monomial {mono!r} has a bad exponent")
        c = Fraction(coeff)
        if c:
            clean[mono] = c
    return clean


class Poly:
    """A sparse polynomial with exact rational coefficients."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, Rational] | None = None):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", _validated_terms(n, terms or {}))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Poly":
        # Internal fast path: terms must already be canonical
        # (Fraction coefficients, no zeros, exponent tuples of length n).
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: Rational) -> "Poly":
        c = Fraction(value)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, n: int, i: int) -> "Poly":
        """The polynomial x_i (1-based index)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exp = [0] * n
        exp[i - 1] = 1
        return cls._raw(n, {tuple(exp): Fraction(1)})

    @classmethod
    def variables(cls, n: int) -> tuple["Poly", ...]:
        """All n coordinate variables, in order."""
        return tuple(cls.variable(n, i) for i in range(1, n + 1))

    # ------------------------------------------------------------------
    # basic structure

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def sorted_terms(self) -> list:
        """Terms in descending lexicographic order of exponent tuples."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Poly({self.n}, {dict(self.sorted_terms())!r})"

    def __str__(self):
        from .textio import render_poly

        return render_poly(self)

    # ------------------------------------------------------------------
    # arithmetic

    def _check_same_dimension(self, other: "Poly"):
        if self.n != other.n:
            raise ValueError(
                f"dimension mismatch: {self.n} vs {other.n}"
            )

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.n, other)
        elif not isinstance(other, Poly):
            return NotImplemented
        self._check_same_dimension(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return Poly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.n, other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly.zero(self.n)
            return Poly._raw(self.n, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_dimension(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly.zero(self.n)
        if len(a) * len(b) > _INT_MUL_THRESHOLD:
            return Poly._raw(self.n, _mul_via_integers(a, b))
        out: dict = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(map(sum, zip(ma, mb)))
                s = get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {e!r}")
        result = Poly.constant(self.n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # calculus and degree

    def total_degree(self):
        """Max total degree over terms; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(map(sum, self.terms))

    def top_form(self) -> "Poly":
        """The homogeneous component of highest total degree (the leading form)."""
        if not self.terms:
            return self
        d = self.total_degree()
        return Poly._raw(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def partial_derivative(self, i: int) -> "Poly":
        """Formal partial derivative with respect to x_i (1-based index)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        k = i - 1
        out = {}
        for mono, c in self.terms.items():
            e = mono[k]
            if e:
                m = mono[:k] + (e - 1,) + mono[k + 1:]
                s = out.get(m, 0) + c * e
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(self.n, out)

    # ------------------------------------------------------------------
    # substitution

    def substitute(self, args: Sequence["Poly"]) -> "Poly":
        """Total substitution: replace x_i by args[i-1] (all at once).

        The args may live in a different dimension m; the result then has
        dimension m.  Raises ValueError if the argument count is not n.
        """
        args = list(args)
        if len(args) != self.n:
            raise ValueError(f"expected {self.n} substitution arguments, got {len(args)}")
        m = args[0].n
        for q in args:
            if q.n != m:
                raise ValueError("substitution arguments have mixed dimensions")
        if not self.terms:
            return Poly.zero(m)
        # cache powers of each argument up to the largest exponent used
        max_exp = [0] * self.n
        for mono in self.terms:
            for k, e in enumerate(mono):
                if e > max_exp[k]:
                    max_exp[k] = e
        powers: list[list[Poly]] = []
        one = Poly.constant(m, 1)
        for k, q in enumerate(args):
            pw = [one]
            for _ in range(max_exp[k]):
                pw.append(pw[-1] * q)
            powers.append(pw)
        total = Poly.zero(m)
        for mono, c in self.terms.items():
            term = Poly.constant(m, c)
            for k, e in enumerate(mono):
                if e:
                    term = term * powers[k][e]
            total = total + term
        return total

    # ------------------------------------------------------------------
    # exact division (used by fraction-free determinant elimination)

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Exact quotient self / divisor; raises ValueError on any remainder."""
        self._check_same_dimension(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self.terms)
        dm = max(divisor.terms)
        dc = divisor.terms[dm]
        quot: dict = {}
        while rem:
            lm = max(rem)
            qm = tuple(a - b for a, b in zip(lm, dm))
            if any(e < 0 for e in qm):
                raise ValueError("inexact polynomial division")
            qc = rem[lm] / dc
            quot[qm] = quot.get(qm, 0) + qc
            for m, c in divisor.terms.items():
                t = tuple(a + b for a, b in zip(qm, m))
                s = rem.get(t, 0) - qc * c
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return Poly._raw(self.n, {m: c for m, c in quot.items() if c})


def _mul_via_integers(a: dict, b: dict) -> dict:
    """Convolution of two term maps through integer arithmetic.

    Multiplying each operand by the lcm of its denominators turns every
    coefficient product in the inner loop into a plain int multiply.
    """
    la = lcm(*(c.denominator for c in a.values())) if a else 1
    lb = lcm(*(c.denominator for c in b.values())) if b else 1
    ia = {m: int(c * la) for m, c in a.items()}
    ib = {m: int(c * lb) for m, c in b.items()}
    out: dict = {}
    get = out.get
    for ma, ca in ia.items():
        for mb, cb in ib.items():
            m = tuple(map(sum, zip(ma, mb)))
            out[m] = get(m, 0) + ca * cb
    scale = la * lb
    return {m: Fraction(v, scale) for m, v in out.items() if v}


# Functional aliases for the core ring operations.

def add(p: Poly, q: Poly) -> Poly:
    """Exact sum p + q (same dimension required)."""
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    """Exact product p * q (same dimension required)."""
    return p * q


def substitute(p: Poly, args: Iterable[Poly]) -> Poly:
    """Substitute args[i-1] for x_i in p."""
    return p.substitute(list(args))


def total_degree(p: Poly):
    """Total degree of p; NEG_INF for the zero polynomial."""
    return p.total_degree()


def partial_derivative(p: Poly, i: int) -> Poly:
    """Formal partial derivative of p with respect to x_i (1-based)."""
    return p.partial_derivative(i)
