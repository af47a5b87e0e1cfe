"""Bounded exhaustive search for perfect powers among power sums.

For every x up to a bound, the sum S = (x+1)^k + ... + (lx)^k is obtained by
exact integer evaluation of the cleared-denominator power-sum polynomial
(literal summation would cost O(x) per candidate), and S is tested for being
an exact n-th power for each 2 <= n <= n_max.  Every record that survives is
re-verified through the independent summation oracle and an independent
exponentiation before it is returned; a mismatch aborts loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .polyring import clear_denominators
from .powersum import bernoulli_diff, has_two_distinct_zeros, power_sum_direct, power_sum_poly
from .structure import assess_superelliptic, multiplicity_profile


class VerificationError(RuntimeError):
    """A computed solution failed its independent re-verification."""


@dataclass(frozen=True)
class SolutionRecord:
    k: int
    l: int
    x: int
    y: int
    n: int
    source: str = "search"


@dataclass(frozen=True)
class SearchConfig:
    k: int
    l: int
    x_max: int
    n_max: int
    partitions: int = 1
    output_format: str = "table"

    def __post_init__(self):
        if self.k < 1 or self.l < 2:
            raise ValueError(f"need k >= 1 and l >= 2, got k={self.k} l={self.l}")
        if self.x_max < 1:
            raise ValueError(f"x_max must be >= 1, got {self.x_max}")
        if self.n_max < 2:
            raise ValueError(f"n_max must be >= 2, got {self.n_max}")
        if self.partitions < 1:
            raise ValueError(f"partitions must be >= 1, got {self.partitions}")
        if self.output_format not in ("table", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def integer_nth_root(s: int, n: int) -> tuple[int, bool]:
    """(floor(s ** (1/n)), is_exact), by pure integer arithmetic."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n == 2:
        r = isqrt(s)
        return r, r * r == s
    if s == 1:
        return 1, True
    # Integer Newton iteration, seeded from above via the bit length.
    r = 1 << -(-s.bit_length() // n)
    while True:
        nxt = ((n - 1) * r + s // r ** (n - 1)) // n
        if nxt >= r:
            break
        r = nxt
    while r**n > s:
        r -= 1
    return r, r**n == s


def _chunk_bounds(x_max: int, partitions: int) -> list[tuple[int, int]]:
    # Contiguous half-open chunks covering [1, x_max]; may be empty when
    # partitions > x_max.
    return [
        (1 + i * x_max // partitions, 1 + (i + 1) * x_max // partitions)
        for i in range(partitions)
    ]


def _search_chunk(cfg: SearchConfig, coeffs: list[int], scale: int, lo: int, hi: int) -> list[SolutionRecord]:
    records = []
    n_range = range(2, cfg.n_max + 1)
    for x in range(lo, hi):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        s, rem = divmod(acc, scale)
        if rem:
            raise VerificationError(f"power sum not integral at x={x}: {acc}/{scale}")
        for n in n_range:
            root, exact = integer_nth_root(s, n)
            if exact:
                records.append(SolutionRecord(cfg.k, cfg.l, x, root, n))
    return records


def search_solutions(cfg: SearchConfig) -> list[SolutionRecord]:
    """All (x, y, n) with G(x) = y^n, x <= x_max, 2 <= n <= n_max.

    Exhaustive within the box; partitioning is a pure chunking of the x
    range, so results are identical for any partition count.
    """
    scale, cleared = clear_denominators(power_sum_poly(cfg.k, cfg.l))
    coeffs = cleared.int_coeffs()
    records: list[SolutionRecord] = []
    for lo, hi in _chunk_bounds(cfg.x_max, cfg.partitions):
        records.extend(_search_chunk(cfg, coeffs, scale, lo, hi))
    records.sort(key=lambda r: (r.x, r.n))
    for r in records:
        # Independent paths: literal summation, builtin exponentiation.
        if power_sum_direct(r.k, r.l, r.x) != r.y**r.n:
            raise VerificationError(f"record failed re-verification: {r}")
    return records


def pipeline_report(k: int, l: int, n_list: list[int]) -> dict:
    """Machine-readable case analysis for the equation G(x) = y^n.

    Per exponent n: the t-multiset of the multiplicity profile of the
    scaled difference polynomial, its exceptional-shape classification,
    whether the effective bound applies, and (for k in {1, 3} with n = 2)
    which Pell family generator covers the exceptional case.  No numeric
    bound is produced.
    """
    if k < 1 or l < 2:
        raise ValueError(f"need k >= 1 and l >= 2, got k={k} l={l}")
    for n in n_list:
        if n < 2:
            raise ValueError(f"every n must be >= 2, got {n}")
    profile = multiplicity_profile(bernoulli_diff(k + 1, l))
    exponents = []
    for n in n_list:
        assessment = assess_superelliptic(profile, n)
        family = None
        if n == 2 and k in (1, 3):
            family = "k1" if k == 1 else "k3"
        exponents.append(
            {
                "n": str(n),
                "t_values": [str(t) for t in assessment.t_values],
                "exceptional": assessment.exceptional.value,
                "bound_applies": assessment.bound_applies,
                "family_generator": family,
            }
        )
    return {
        "k": str(k),
        "l": str(l),
        "has_two_distinct_zeros": has_two_distinct_zeros(power_sum_poly(k, l)),
        "multiplicity_profile": [str(r) for r in profile.multiplicities],
        "total_zeros": str(profile.total_zeros),
        "exponents": exponents,
    }
