"""Linear complexity three independent ways, plus 2-adic maximality.

For a period-N binary sequence the linear complexity is N minus the degree
of gcd(S(x), x^N - 1), where S is the period polynomial.  That gcd route
and an iterative Berlekamp-Massey synthesis are implemented separately so
each serves as an oracle for the other.

For the period-4n interleaved sequence w(a, b) of two ideal-autocorrelation
sequences there is a closed form

    LC(w) = 2n + 2 - z_ab - z_sum,

where z_ab and z_sum are the degrees of gcd(S_a, S_b, 1 + x + ... + x^(n-1))
and gcd(S_a + S_b, 1 + x + ... + x^(n-1)).  Those degrees count the common
zeros among the nontrivial n-th roots of unity, so no extension-field
element is ever materialized: everything stays an exact GF(2) gcd.

2-adic complexity is reported as an exact maximality verdict:
gcd(S(2), 2^N - 1) = 1, evaluated with big-integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .f2poly import F2Poly, all_ones, gcd, mul_mod, seq_poly, stretch, x_pow_n_plus_1
from .interleave import tang_ding
from .numtheory import is_prime
from .sequences import BinarySeq, autocorrelation_profile, is_ideal


def lc_gcd(a: BinarySeq) -> int:
    """Linear complexity as N - deg gcd(S_a(x), x^N - 1); 0 for the zero sequence."""
    if a.mask == 0:
        return 0
    N = a.period
    f = gcd(seq_poly(a), x_pow_n_plus_1(N))
    return N - f.degree


def lc_berlekamp_massey(a: BinarySeq) -> int:
    """Length of the shortest GF(2) LFSR generating the periodic extension.

    Runs the iterative synthesis over exactly 2N terms, which determines
    the true linear complexity because LC <= N for an N-periodic sequence.
    All polynomials are bit-packed; the discrepancy is a masked popcount
    against an incrementally reversed window of the stream.
    """
    N = a.period
    stream = a.mask | (a.mask << N)  # two periods
    C, B = 1, 1  # connection polynomial and previous best, bit i = coeff of x^i
    L, gap = 0, 1  # current LFSR length, steps since last length change
    R = 0  # bit i = s_{k-i}: window reversed around the current index
    for k in range(2 * N):
        R = (R << 1) | ((stream >> k) & 1)
        if (C & R).bit_count() & 1:
            if 2 * L <= k:
                C, B = C ^ (B << gap), C
                L = k + 1 - L
                gap = 1
            else:
                C ^= B << gap
                gap += 1
        else:
            gap += 1
    return L


def z_set_sizes(a: BinarySeq, b: BinarySeq) -> tuple[int, int]:
    """(z_ab, z_sum): counts of common zeros among the nontrivial n-th roots of unity.

    z_ab = deg gcd(S_a, S_b, 1 + ... + x^(n-1)) counts zeros shared by both
    sequences; z_sum = deg gcd(S_a + S_b, 1 + ... + x^(n-1)) counts zeros of
    the sum.  x^n - 1 is squarefree for odd n, so degrees equal set sizes.
    """
    n = a.period
    if b.period != n:
        raise ValueError("sequences must share one period")
    if n % 2 == 0:
        raise ValueError("period must be odd")
    u = all_ones(n)
    sa, sb = seq_poly(a), seq_poly(b)
    z_ab = gcd(gcd(sa, sb), u).degree
    z_sum = gcd(sa + sb, u).degree
    return z_ab, z_sum


def _require_ideal_pair(a: BinarySeq, b: BinarySeq) -> None:
    if a.period != b.period:
        raise ValueError("sequences must share one period")
    if not is_ideal(a) or not is_ideal(b):
        raise ValueError(
            "interleaved-formula operations require both inputs to have "
            "ideal autocorrelation"
        )


def lc_interleaved_formula(a: BinarySeq, b: BinarySeq) -> int:
    """LC of w(a, b) via the closed form 2n + 2 - z_ab - z_sum.

    The formula is proved only for ideal-autocorrelation inputs, so that
    precondition is enforced rather than silently returning a number the
    closed form does not guarantee.
    """
    _require_ideal_pair(a, b)
    z_ab, z_sum = z_set_sizes(a, b)
    return 2 * a.period + 2 - z_ab - z_sum


def attains_max(a: BinarySeq, b: BinarySeq) -> bool:
    """True iff LC(w(a, b)) reaches its ceiling 2n + 2, i.e. z_sum = 0."""
    _require_ideal_pair(a, b)
    return z_set_sizes(a, b)[1] == 0


def lemma1_poly(a: BinarySeq, b: BinarySeq) -> F2Poly:
    """Closed form of the period polynomial of w(a, b), reduced mod x^4n - 1.

    Equals (1 + x^2n) * S_a(x^4) + (x^n + x^3n) * S_b(x^4)
    + x^3 * (1 + x^4 + ... + x^(4(n-1))); holds for arbitrary a, b of
    period n = 3 mod 4, no autocorrelation assumption.
    """
    n = a.period
    if b.period != n:
        raise ValueError("sequences must share one period")
    if n % 4 != 3:
        raise ValueError(f"period must be 3 mod 4, got {n}")
    modulus = x_pow_n_plus_1(4 * n)
    a4 = stretch(seq_poly(a), 4)
    b4 = stretch(seq_poly(b), 4)
    term_a = mul_mod(F2Poly(1 | (1 << (2 * n))), a4, modulus)
    term_b = mul_mod(F2Poly((1 << n) | (1 << (3 * n))), b4, modulus)
    comb = F2Poly(stretch(all_ones(n), 4).bits << 3)
    return term_a + term_b + comb


def two_adic_gcd(a: BinarySeq) -> int:
    """gcd(S_a(2), 2^N - 1) as an exact big integer."""
    return math.gcd(a.mask, (1 << a.period) - 1)


def two_adic_max(a: BinarySeq) -> bool:
    """True iff the 2-adic complexity is maximal, i.e. gcd(S_a(2), 2^N - 1) = 1."""
    return two_adic_gcd(a) == 1


def gauss_sum_poly(
    p: int, q: int, which: Literal["p", "q"], eps: int
) -> F2Poly:
    """Quadratic-residue indicator polynomial for one prime of a pair.

    For which="p" this is the sum of x^(q*i) over 1 <= i < p with
    (i/p) = eps; for which="q" the roles swap.  Degree stays below pq.
    """
    if p == q:
        raise ValueError("primes must be distinct")
    for v in (p, q):
        if v % 2 == 0 or not is_prime(v):
            raise ValueError(f"{v} is not an odd prime")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if which == "p":
        modulus, multiplier = p, q
    elif which == "q":
        modulus, multiplier = q, p
    else:
        raise ValueError(f"which must be 'p' or 'q', got {which!r}")
    residues = {i * i % modulus for i in range(1, modulus)}
    bits = 0
    for i in range(1, modulus):
        if (i in residues) == (eps == 1):
            bits |= 1 << (multiplier * i)
    return F2Poly(bits)


@dataclass(frozen=True)
class LCReport:
    """Full cross-checked analysis record of one interleaved pair."""

    n: int
    lc_direct: int
    lc_bm: int
    lc_formula: int
    z_ab: int
    z_sum: int
    attains_max: bool
    autocorr_values: dict[int, int]
    two_adic_max: bool

    def consistency_failures(self) -> list[str]:
        """Violations of the record's internal invariants (empty when sound)."""
        bad = []
        if not (self.lc_direct == self.lc_bm == self.lc_formula):
            bad.append(
                f"LC methods disagree: gcd={self.lc_direct} "
                f"bm={self.lc_bm} formula={self.lc_formula}"
            )
        ceiling = 2 * self.n + 2
        if self.lc_formula != ceiling - self.z_ab - self.z_sum:
            bad.append("formula value inconsistent with z-set sizes")
        if self.lc_formula > ceiling:
            bad.append(f"LC {self.lc_formula} exceeds ceiling {ceiling}")
        if self.z_ab > self.z_sum:
            bad.append(f"z_ab={self.z_ab} exceeds z_sum={self.z_sum}")
        if self.attains_max != (self.z_sum == 0):
            bad.append("attains_max disagrees with z_sum")
        if self.attains_max != (self.lc_formula == ceiling):
            bad.append("attains_max disagrees with the LC ceiling")
        return bad


def analyze_pair(a: BinarySeq, b: BinarySeq) -> LCReport:
    """Build w(a, b) and measure it every way the report records.

    Runs all three linear-complexity routes, the z-set sizes, the full
    autocorrelation profile and the 2-adic maximality verdict; inputs must
    both have ideal autocorrelation.
    """
    _require_ideal_pair(a, b)
    n = a.period
    z_ab, z_sum = z_set_sizes(a, b)
    w = tang_ding(a, b)
    return LCReport(
        n=n,
        lc_direct=lc_gcd(w),
        lc_bm=lc_berlekamp_massey(w),
        lc_formula=2 * n + 2 - z_ab - z_sum,
        z_ab=z_ab,
        z_sum=z_sum,
        attains_max=z_sum == 0,
        autocorr_values=autocorrelation_profile(w),
        two_adic_max=two_adic_max(w),
    )
