"""The power-sum polynomial and its direct-summation oracle.

For k >= 1 and l >= 2, ``power_sum_poly(k, l)`` is the degree k+1 polynomial
whose value at every positive integer x equals

    (x+1)^k + (x+2)^k + ... + (lx)^k.

It is built from Bernoulli polynomials as (B_q(lx+1) - B_q(x+1)) / q with
q = k+1, never by expanding the sum; ``power_sum_direct`` is the independent
big-integer summation used to cross-check it and to verify every solution
this package ever reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import bernoulli_polynomial
from .polyring import Poly, squarefree_decompose


@dataclass(frozen=True)
class PowerSumInstance:
    """A fixed exponent k and range multiplier l."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.l < 2:
            raise ValueError(f"l must be >= 2, got {self.l}")

    @property
    def q(self) -> int:
        return self.k + 1


def bernoulli_diff(q: int, l: int) -> Poly:
    """B_q(lx+1) - B_q(x+1); equals q times the power-sum polynomial."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if l < 2:
        raise ValueError(f"l must be >= 2, got {l}")
    bq = bernoulli_polynomial(q)
    return bq.compose(Poly((1, l))) - bq.compose(Poly((1, 1)))


def power_sum_poly(k: int, l: int) -> Poly:
    inst = PowerSumInstance(k, l)
    return bernoulli_diff(inst.q, l) * Fraction(1, inst.q)


def power_sum_direct(k: int, l: int, x: int) -> int:
    """Literal summation (x+1)^k + ... + (lx)^k with big integers.

    Deliberately independent of all polynomial code.
    """
    inst = PowerSumInstance(k, l)
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    return sum(j**inst.k for j in range(x + 1, inst.l * x + 1))


def has_two_distinct_zeros(p: Poly) -> bool:
    """True iff p has at least two distinct complex zeros.

    Counted exactly as the degree of the squarefree part; no numeric
    root-finding is involved.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("zero count needs a nonconstant polynomial")
    return squarefree_decompose(p).squarefree_degree() >= 2
