"""Zero-multiplicity structure of the scaled power-sum difference polynomial.

Everything here reasons about P(x) = B_q(lx+1) - B_q(x+1) through its
squarefree decomposition: multiplicities of distinct complex zeros, the
minimal integer scale d that clears its Bernoulli denominators, and the
mod-2 / mod-4 images of d*P used by the structural arguments.  The
superelliptic classifier at the bottom decides whether the effective
finiteness bound of LeVeque/Brindza type applies to y^m = H(x) for a given
multiplicity pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb, gcd, lcm

from .bernoulli import _is_prime, bernoulli_number
from .polyring import ModPoly, Poly, reduce_mod, squarefree_decompose
from .powersum import bernoulli_diff


@dataclass(frozen=True)
class MultiplicityProfile:
    """Degree-weighted multiset of zero multiplicities.

    Each squarefree factor of degree g and multiplicity r contributes g
    distinct complex zeros of multiplicity r.
    """

    multiplicities: tuple[int, ...]
    total_zeros: int


def multiplicity_profile(p: Poly) -> MultiplicityProfile:
    if p.is_zero or p.degree < 1:
        raise ValueError("multiplicity profile needs a nonconstant polynomial")
    decomp = squarefree_decompose(p)
    mults: list[int] = []
    for f, m in decomp.factors:
        mults.extend([m] * (len(f.coeffs) - 1))
    mults.sort()
    assert sum(mults) == p.degree
    return MultiplicityProfile(tuple(mults), len(mults))


def count_odd_multiplicity_zeros(profile: MultiplicityProfile) -> int:
    return sum(1 for r in profile.multiplicities if r % 2 == 1)


def count_coprime_multiplicity_zeros(profile: MultiplicityProfile, p: int) -> int:
    """Number of zeros whose multiplicity is coprime to the odd prime p."""
    if p < 3 or p % 2 == 0 or not _is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return sum(1 for r in profile.multiplicities if gcd(r, p) == 1)


def clearing_scale(q: int, l: int) -> int:
    """Least d >= 1 such that d*(B_q(x) - B_q) has integer coefficients.

    The result depends only on q (it is the lcm of the denominators of
    C(q, i) B_i over 0 <= i < q); the given l is used to assert that
    d*(B_q(lx+1) - B_q(x+1)) is integral as well.  d is odd exactly when q
    is a power of two, and otherwise d = 2 mod 4.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    d = 1
    for i in range(q):
        d = lcm(d, (comb(q, i) * bernoulli_number(i)).denominator)
    scaled = bernoulli_diff(q, l) * d
    assert scaled.is_integral, f"d={d} fails to clear q={q}, l={l}"
    return d


def scaled_diff_mod(q: int, l: int, m: int) -> ModPoly:
    """d * (B_q(lx+1) - B_q(x+1)) reduced coefficient-wise modulo m in {2, 4}."""
    d = clearing_scale(q, l)
    return reduce_mod(bernoulli_diff(q, l) * d, m)


class ExceptionalShape(str, Enum):
    NONE = "none"
    SHAPE_A = "shape_a"
    SHAPE_B = "shape_b"


@dataclass(frozen=True)
class SuperellipticAssessment:
    """Classification of t_i = m / gcd(m, r_i) against the two exceptional
    multiplicity patterns {t,1,...,1} and {2,2,1,...,1}."""

    m: int
    t_values: tuple[int, ...]
    exceptional: ExceptionalShape

    @property
    def bound_applies(self) -> bool:
        return self.exceptional is ExceptionalShape.NONE


def assess_superelliptic(profile: MultiplicityProfile, m: int) -> SuperellipticAssessment:
    """Decide whether the effective bound for y^m = H(x) applies.

    The bound fails only for the two exceptional t-multisets; everything
    else returns ``ExceptionalShape.NONE``.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    ts = tuple(sorted(m // gcd(m, r) for r in profile.multiplicities))
    nontrivial = [t for t in ts if t > 1]
    if len(nontrivial) <= 1:
        shape = ExceptionalShape.SHAPE_A
    elif nontrivial == [2, 2]:
        shape = ExceptionalShape.SHAPE_B
    else:
        shape = ExceptionalShape.NONE
    return SuperellipticAssessment(m, ts, shape)


def _odd_primes_upto(q: int) -> list[int]:
    return [p for p in range(3, q + 1, 2) if _is_prime(p)]


@dataclass(frozen=True)
class StructureReport:
    """Snapshot of the structural facts for one (q, l) with l even.

    conclusion_i:  at least three zeros of odd multiplicity (exempt, and
                   reported True, for q in {2, 4}).
    conclusion_ii: for every odd prime p <= q, at least two zeros have
                   multiplicity coprime to p.  Primes p > q are vacuously
                   fine because every multiplicity is at most q.
    """

    q: int
    l: int
    d: int
    odd_multiplicity_zero_count: int
    coprime_counts: dict[int, int]
    mod4_snapshot: ModPoly
    conclusion_i: bool
    conclusion_ii: bool
    exempt_i: bool
    primes_above_q_vacuous: bool = True

    def to_json_dict(self) -> dict:
        return {
            "q": str(self.q),
            "l": str(self.l),
            "d": str(self.d),
            "odd_multiplicity_zero_count": str(self.odd_multiplicity_zero_count),
            "coprime_counts": {str(p): str(c) for p, c in self.coprime_counts.items()},
            "mod4_snapshot": [str(c) for c in self.mod4_snapshot.coeffs],
            "conclusion_i": self.conclusion_i,
            "conclusion_ii": self.conclusion_ii,
            "exempt_i": self.exempt_i,
            "primes_above_q_vacuous": self.primes_above_q_vacuous,
        }


def structure_report(q: int, l: int) -> StructureReport:
    """Verify the zero-structure claims for one (q, l); l must be even."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if l < 2 or l % 2 != 0:
        raise ValueError(f"l must be an even integer >= 2, got {l}")
    d = clearing_scale(q, l)
    profile = multiplicity_profile(bernoulli_diff(q, l))
    odd_count = count_odd_multiplicity_zeros(profile)
    coprime = {p: count_coprime_multiplicity_zeros(profile, p) for p in _odd_primes_upto(q)}
    exempt = q in (2, 4)
    return StructureReport(
        q=q,
        l=l,
        d=d,
        odd_multiplicity_zero_count=odd_count,
        coprime_counts=coprime,
        mod4_snapshot=scaled_diff_mod(q, l, 4),
        conclusion_i=True if exempt else odd_count >= 3,
        conclusion_ii=all(c >= 2 for c in coprime.values()),
        exempt_i=exempt,
    )


def bound_applies(k: int, l: int, n: int) -> bool:
    """True iff the effective finiteness bound applies to the power-sum
    equation with exponent n, for k >= 2, k != 3, and even l."""
    if k < 2 or k == 3:
        raise ValueError(f"k must be >= 2 and != 3, got {k}")
    if l < 2 or l % 2 != 0:
        raise ValueError(f"l must be an even integer >= 2, got {l}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    profile = multiplicity_profile(bernoulli_diff(k + 1, l))
    return assess_superelliptic(profile, n).bound_applies
