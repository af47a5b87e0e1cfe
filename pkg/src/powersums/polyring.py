"""Exact univariate polynomial arithmetic over the rationals.

Coefficients are `fractions.Fraction` values stored densely, constant term
first, with no trailing zeros.  Everything in here is immutable and every
operation is a pure function, so values can be shared freely across threads.

The degree of the zero polynomial is the float ``-inf`` sentinel (it compares
correctly against integer degrees; it is never used in arithmetic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

NEG_INFINITY = float("-inf")

Rat = Union[int, Fraction]


class Poly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rat] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Rat) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Rat = 1) -> Poly:
        return cls((0,) * degree + (c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral:
            raise ValueError(f"polynomial has non-integer coefficients: {self!r}")
        return [c.numerator for c in self.coeffs]

    def coeff(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Poly | Rat) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def eval(self, x: Rat) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def compose(self, inner: Poly) -> Poly:
        """self(inner(x)), by Horner on the outer coefficients."""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(), self
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, len(other.coeffs) - 1
        inv_lead = 1 / other.leading
        quot = [Fraction(0)] * (dn - dd + 1)
        for i in range(dn - dd, -1, -1):
            q = rem[i + dd] * inv_lead
            if q:
                quot[i] = q
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= q * c
        return Poly(quot), Poly(rem)

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError(f"{self!r} is not divisible by {other!r}")
        return q

    def monic(self) -> Poly:
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        return self * (1 / self.leading)


@dataclass(frozen=True)
class ModPoly:
    """Integer polynomial reduced coefficient-wise modulo 2 or 4."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.modulus not in (2, 4):
            raise ValueError(f"modulus must be 2 or 4, got {self.modulus}")
        cs = [c % self.modulus for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def _check(self, other: ModPoly) -> None:
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli")

    def __add__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ModPoly(self.modulus, tuple(out))

    def __mul__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return ModPoly(self.modulus, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ModPoly(self.modulus, tuple(out))


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """content * prod(factor_i ** multiplicity_i) == the decomposed polynomial.

    Factors are primitive integer polynomials with positive leading
    coefficient, squarefree and pairwise coprime, listed in a fixed total
    order: (multiplicity, degree, coefficient tuple).
    """

    content: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly.constant(self.content)
        for f, m in self.factors:
            out = out * f**m
        return out

    def squarefree_degree(self) -> int:
        """Total degree of the squarefree part = number of distinct complex zeros."""
        return sum(len(f.coeffs) - 1 for f, _ in self.factors)


def primitive_part(p: Poly) -> tuple[Fraction, Poly]:
    """Split ``p`` as content * primitive, where the primitive part has
    coprime integer coefficients and a positive leading one."""
    if p.is_zero:
        return Fraction(0), Poly.zero()
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), Poly(tuple(c // g for c in ints))


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # Pseudo-remainder of integer coefficient lists (constant term first);
    # the result is only meaningful up to a scalar, which primitive-part
    # normalization removes.
    db = len(b) - 1
    lead = b[-1]
    rem = list(a)
    while rem and len(rem) - 1 >= db:
        if rem[-1] == 0:
            rem.pop()
            continue
        shift = len(rem) - 1 - db
        top = rem[-1]
        rem = [lead * r for r in rem]
        for j, bc in enumerate(b):
            rem[shift + j] -= top * bc
        rem.pop()  # the leading term cancels exactly
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _int_pp(cs: list[int]) -> list[int]:
    g = 0
    for c in cs:
        g = gcd(g, c)
    if cs and cs[-1] < 0:
        g = -g
    return [c // g for c in cs] if g else cs


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor over the rationals.

    Internally a primitive polynomial remainder sequence on integer
    coefficients, which keeps intermediate growth in check.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    _, a = primitive_part(p)
    _, b = primitive_part(q)
    ac, bc = list(a.int_coeffs()), list(b.int_coeffs())
    if len(ac) < len(bc):
        ac, bc = bc, ac
    while bc:
        ac, bc = bc, _int_pp(_pseudo_rem(ac, bc))
    return Poly(ac).monic()


def squarefree_decompose(p: Poly) -> SquarefreeDecomposition:
    """Squarefree decomposition by Yun's algorithm.

    >>> squarefree_decompose(Poly((0, 0, 1, 1)))  # x^2 (x+1)
    SquarefreeDecomposition(content=Fraction(1, 1), factors=((Poly(['1', '1']), 1), (Poly(['0', '1']), 2)))
    """
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    if p.degree == 0:
        return SquarefreeDecomposition(p.leading, ())
    content = p.leading
    cur = p.monic()
    g = poly_gcd(cur, cur.derivative())
    c = cur.exact_div(g)
    d = cur.derivative().exact_div(g) - c.derivative()
    factors: list[tuple[Poly, int]] = []
    mult = 1
    while c.degree > 0:
        a = poly_gcd(c, d) if not d.is_zero else c.monic()
        if a.degree > 0:
            cont, prim = primitive_part(a)
            content *= cont**mult
            factors.append((prim, mult))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        mult += 1
    factors.sort(key=lambda fm: (fm[1], len(fm[0].coeffs) - 1, fm[0].coeffs))
    return SquarefreeDecomposition(content, tuple(factors))


def clear_denominators(p: Poly) -> tuple[int, Poly]:
    """Least positive d with d*p integral, together with d*p.

    The zero polynomial maps to (1, 0) by convention.
    """
    if p.is_zero:
        return 1, Poly.zero()
    d = lcm(*(c.denominator for c in p.coeffs))
    return d, p * d


def reduce_mod(p: Poly, m: int) -> ModPoly:
    """Coefficient-wise reduction of an integer polynomial into [0, m)."""
    if m not in (2, 4):
        raise ValueError(f"modulus must be 2 or 4, got {m}")
    return ModPoly(m, tuple(p.int_coeffs()))
