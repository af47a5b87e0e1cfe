"""Bernoulli numbers and polynomials, exact and memoized.

Sign convention: B_1 = -1/2, which is the one forced by the defining
recurrence sum_{i=0}^{q} C(q+1, i) B_i = 0.  The q-th Bernoulli polynomial is
B_q(x) = sum_{i=0}^{q} C(q, i) B_i x^(q-i), a monic degree-q polynomial.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, isqrt
from typing import Iterable

from .polyring import Poly


class BernoulliTable:
    """Growable table of B_0..B_n.

    Reads of already-computed entries are lock-free; growth happens under a
    lock, so concurrent callers may share one table (or pre-warm it before a
    parallel section).
    """

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    def prewarm(self, n: int) -> None:
        self.value(n)

    def value(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {i}")
        if i <= self.max_index:
            return self._values[i]
        with self._lock:
            values = list(self._values)
            for m in range(len(values), i + 1):
                acc = Fraction(0)
                for j in range(m):
                    if values[j]:
                        acc += comb(m + 1, j) * values[j]
                values.append(-acc / (m + 1))
            self._values = values
        return self._values[i]


_TABLE = BernoulliTable()


def bernoulli_number(i: int) -> Fraction:
    """B_i under the B_1 = -1/2 convention."""
    return _TABLE.value(i)


def bernoulli_polynomial(q: int) -> Poly:
    """B_q(x) as an exact polynomial, constant term first."""
    if q < 0:
        raise ValueError(f"Bernoulli polynomial degree must be >= 0, got {q}")
    _TABLE.prewarm(q)
    coeffs = [Fraction(0)] * (q + 1)
    for i in range(q + 1):
        coeffs[q - i] = comb(q, i) * bernoulli_number(i)
    return Poly(coeffs)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def staudt_clausen_denominator(q: int) -> int:
    """Product of the primes p with (p-1) | q; equals denominator(B_q).

    Von Staudt-Clausen: for even q >= 2 this denominator is squarefree,
    divisible by 6, and congruent to 2 mod 4.
    """
    if q <= 0 or q % 2 != 0:
        raise ValueError(f"q must be a positive even integer, got {q}")
    out = 1
    for e in range(1, q + 1):
        if q % e == 0 and _is_prime(e + 1):
            out *= e + 1
    return out


def translation_identity_holds(q: int, samples: Iterable[Fraction] = ()) -> bool:
    """True iff B_q(x+1) - B_q(x) = q x^(q-1).

    Checked symbolically; each entry of ``samples`` is additionally
    spot-checked by direct evaluation.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    bq = bernoulli_polynomial(q)
    delta = bq.compose(Poly((1, 1))) - bq - Poly.monomial(q - 1, q)
    if not delta.is_zero:
        return False
    for s in samples:
        s = Fraction(s)
        if bq.eval(s + 1) - bq.eval(s) != q * s ** (q - 1):
            return False
    return True
