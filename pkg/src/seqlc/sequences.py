"""Periodic binary sequence generators and transforms.

A BinarySeq stores one period bit-packed into an integer (bit i = a_i),
so complement, cyclic shift and autocorrelation reduce to integer XOR,
rotation and popcount.  Sequences compare as exact periodic bit vectors;
no cyclic-equivalence quotient is applied implicitly.

Generators cover the classical ideal-autocorrelation families:

* m-sequences of period 2**l - 1, realized as an LFSR stream whose
  characteristic polynomial is a primitive polynomial of degree l;
* Legendre sequences of period p = 3 (mod 4) (quadratic-residue indicator,
  both choices of the bit at index 0);
* Hall sextic-residue sequences for primes p = 4x^2 + 27;
* twin-prime sequences of period p(p+2).

The shift L^r, sample M_s and complementation generate the transformation
group under which ideal autocorrelation is closed.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from . import f2poly
from .f2poly import F2Poly
from .numtheory import (
    cyclotomic_classes6,
    factorize,
    is_prime,
    primitive_roots,
)


class BinarySeq:
    """One period of a {0,1} sequence, bit-packed (bit i = a_i)."""

    __slots__ = ("mask", "period")

    def __init__(self, mask: int, period: int):
        if period < 1:
            raise ValueError("period must be at least 1")
        if not 0 <= mask < (1 << period):
            raise ValueError("mask has bits outside one period")
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "period", period)

    def __setattr__(self, name, value):
        raise AttributeError("BinarySeq is immutable")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BinarySeq":
        mask, length = 0, 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError("sequence entries must be 0 or 1")
            mask |= b << length
            length += 1
        return cls(mask, length)

    @classmethod
    def from_string(cls, text: str) -> "BinarySeq":
        mask = 0
        for i, ch in enumerate(text):
            if ch == "1":
                mask |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid character {ch!r} at offset {i}")
        if not text:
            raise ValueError("empty sequence")
        return cls(mask, len(text))

    @classmethod
    def zeros(cls, period: int) -> "BinarySeq":
        return cls(0, period)

    @classmethod
    def ones(cls, period: int) -> "BinarySeq":
        return cls((1 << period) - 1, period)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> i) & 1 for i in range(self.period))

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.period

    def __getitem__(self, i: int) -> int:
        return (self.mask >> (i % self.period)) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinarySeq)
            and self.mask == other.mask
            and self.period == other.period
        )

    def __hash__(self) -> int:
        return hash((self.mask, self.period))

    def __reduce__(self):
        return (BinarySeq, (self.mask, self.period))

    def to_string(self) -> str:
        return "".join("01"[(self.mask >> i) & 1] for i in range(self.period))

    def __repr__(self) -> str:
        if self.period <= 40:
            return f"BinarySeq({self.to_string()!r})"
        return f"BinarySeq(period={self.period}, weight={self.weight})"


@dataclass(frozen=True)
class GroupElement:
    """L^r M_s: sample by s, then shift by r (gcd(s, period) = 1 at use)."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("shift must be nonnegative")
        if self.s < 1:
            raise ValueError("sample index must be positive")


def complement(a: BinarySeq) -> BinarySeq:
    """Flip every bit of one period."""
    return BinarySeq(a.mask ^ ((1 << a.period) - 1), a.period)


def shift(a: BinarySeq, r: int) -> BinarySeq:
    """L^r: output bit i is input bit (i + r) mod period."""
    n = a.period
    r %= n
    if r == 0:
        return a
    full = (1 << n) - 1
    return BinarySeq(((a.mask >> r) | (a.mask << (n - r))) & full, n)


def sample(a: BinarySeq, s: int) -> BinarySeq:
    """M_s: output bit i is input bit s*i mod period; s must be coprime."""
    n = a.period
    s %= n
    if math.gcd(s, n) != 1:
        raise ValueError(f"sample index {s} is not coprime to period {n}")
    if s == 1:
        return a
    mask, j = 0, 0
    src = a.mask
    for i in range(n):
        mask |= ((src >> j) & 1) << i
        j += s
        if j >= n:
            j -= n
    return BinarySeq(mask, n)


def apply_group(a: BinarySeq, sigma: GroupElement) -> BinarySeq:
    """Apply L^r M_s: first sample by sigma.s, then shift by sigma.r."""
    return shift(sample(a, sigma.s), sigma.r)


def autocorrelation(a: BinarySeq, tau: int) -> int:
    """Signed correlation of a with its shift by tau: sum of (-1)^(a_i + a_{i+tau})."""
    n = a.period
    tau %= n
    if tau == 0:
        return n
    full = (1 << n) - 1
    rot = ((a.mask >> tau) | (a.mask << (n - tau))) & full
    return n - 2 * (a.mask ^ rot).bit_count()


def autocorrelation_profile(a: BinarySeq) -> dict[int, int]:
    """Multiset {value: count} of autocorrelations over all nonzero shifts."""
    n, m = a.period, a.mask
    full = (1 << n) - 1
    counts: dict[int, int] = {}
    for tau in range(1, n):
        rot = ((m >> tau) | (m << (n - tau))) & full
        v = n - 2 * (m ^ rot).bit_count()
        counts[v] = counts.get(v, 0) + 1
    return counts


@functools.lru_cache(maxsize=8192)
def is_ideal(a: BinarySeq) -> bool:
    """True iff every nonzero shift has autocorrelation exactly -1.

    Defined only for period = 3 (mod 4), the only residue class where the
    value -1 at every shift is arithmetically possible.
    """
    n = a.period
    if n % 4 != 3:
        raise ValueError(f"ideal autocorrelation needs period = 3 mod 4, got {n}")
    m = a.mask
    full = (1 << n) - 1
    target = (n + 1) // 2  # A(tau) = -1 iff the XOR weight is (n+1)/2
    for tau in range(1, n):
        rot = ((m >> tau) | (m << (n - tau))) & full
        if (m ^ rot).bit_count() != target:
            return False
    return True


# ---------------------------------------------------------------------------
# m-sequences


def is_primitive_polynomial(f: F2Poly) -> bool:
    """True iff the order of x mod f equals 2**deg(f) - 1."""
    l = f.degree
    if l is None or l < 1 or f.coeff(0) == 0:
        return False
    order = (1 << l) - 1
    if f2poly.pow_mod(f2poly.X, order, f) != f2poly.ONE:
        return False
    return all(
        f2poly.pow_mod(f2poly.X, order // q, f) != f2poly.ONE
        for q in factorize(order)
    )


def primitive_polynomials(l: int) -> Iterator[F2Poly]:
    """Degree-l primitive polynomials in increasing integer encoding."""
    if l < 2:
        raise ValueError("degree must be at least 2")
    for enc in range((1 << l) | 1, 1 << (l + 1), 2):
        f = F2Poly(enc)
        if is_primitive_polynomial(f):
            yield f


def primitive_polynomial(l: int) -> F2Poly:
    """The degree-l primitive polynomial with the smallest integer encoding."""
    return next(primitive_polynomials(l))


def m_sequence(l: int, char_poly: F2Poly | None = None, alpha_exp: int = 0) -> BinarySeq:
    """Maximal-length LFSR sequence of period 2**l - 1.

    The stream is the solution of the linear recurrence whose characteristic
    polynomial is char_poly (primitive of degree l; smallest encoding when
    omitted).  The initial state is the bit pattern of x**alpha_exp reduced
    mod char_poly, so distinct alpha_exp values select distinct shifts of
    the same trace sequence deterministically.
    """
    if l < 2:
        raise ValueError("degree must be at least 2")
    if char_poly is None:
        char_poly = primitive_polynomial(l)
    if char_poly.degree != l:
        raise ValueError(f"characteristic polynomial must have degree {l}")
    if not is_primitive_polynomial(char_poly):
        raise ValueError(f"{char_poly!r} is not primitive")
    n = (1 << l) - 1
    if not 0 <= alpha_exp < n:
        raise ValueError(f"alpha_exp must lie in [0, {n})")
    state = f2poly.pow_mod(f2poly.X, alpha_exp, char_poly).bits
    taps = char_poly.bits & ((1 << l) - 1)
    mask = state
    for i in range(l, n):
        nxt = (taps & (mask >> (i - l))).bit_count() & 1
        mask |= nxt << i
    return BinarySeq(mask, n)


# ---------------------------------------------------------------------------
# Legendre sequences


def _qr_set(p: int) -> set[int]:
    return {i * i % p for i in range(1, p)}


def legendre_seq(p: int, variant: Literal["ell", "ell_prime"] = "ell") -> BinarySeq:
    """Legendre sequence of period p (prime, p = 3 mod 4).

    Bit i is 1 exactly when i is a nonzero quadratic residue mod p; the bit
    at index 0 is 0 for variant "ell" and 1 for variant "ell_prime".
    """
    if not is_prime(p) or p % 4 != 3:
        raise ValueError(f"{p} is not a prime congruent to 3 mod 4")
    if variant not in ("ell", "ell_prime"):
        raise ValueError(f"unknown variant {variant!r}")
    mask = 1 if variant == "ell_prime" else 0
    for i in _qr_set(p):
        mask |= 1 << i
    return BinarySeq(mask, p)


# ---------------------------------------------------------------------------
# Hall sextic-residue sequences


def hall_parameter(p: int) -> int | None:
    """x with p = 4x^2 + 27, or None when p is not of that form."""
    if p < 27 or (p - 27) % 4 != 0:
        return None
    x = 0
    while 4 * x * x + 27 < p:
        x += 1
    return x if 4 * x * x + 27 == p else None


def hall_construction(p: int):
    """Hall sequence plus the cyclotomic classes that produced it.

    The class labeling depends on the primitive root; roots are tried in
    increasing order and the construction is accepted only once the
    resulting sequence verifies ideal autocorrelation, which pins down a
    deterministic, checked choice.
    """
    if not is_prime(p) or hall_parameter(p) is None:
        raise ValueError(f"{p} is not a prime of the form 4x^2 + 27")
    for g in primitive_roots(p):
        classes = cyclotomic_classes6(p, g)
        mask = 0
        for d in (0, 1, 3):
            for i in classes.classes[d]:
                mask |= 1 << i
        h = BinarySeq(mask, p)
        if is_ideal(h):
            return h, classes
    raise RuntimeError(
        f"no primitive root mod {p} yields ideal autocorrelation"
    )  # unreachable for genuine Hall primes


def hall_seq(p: int) -> BinarySeq:
    """Hall sequence of period p = 4x^2 + 27: indicator of D0 | D1 | D3."""
    return hall_construction(p)[0]


# ---------------------------------------------------------------------------
# Twin-prime sequences


def twin_prime_seq(p: int, variant: Literal["t", "tau_t"] = "t") -> BinarySeq:
    """Twin-prime sequence of period n = p(p+2), both factors prime.

    Bit 0 is 0; nonzero multiples of p map to 1, nonzero multiples of q to
    0; a unit i maps by the sign of (i/p)(i/q): variant "t" puts 1 on the
    -1 class, variant "tau_t" on the +1 class.
    """
    q = p + 2
    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"({p}, {p + 2}) is not a twin prime pair")
    if variant not in ("t", "tau_t"):
        raise ValueError(f"unknown variant {variant!r}")
    n = p * q
    qr_p = _qr_set(p)
    qr_q = _qr_set(q)
    ones_on = -1 if variant == "t" else 1
    mask = 0
    for i in range(1, n):
        ip, iq = i % p, i % q
        if ip == 0:
            mask |= 1 << i
        elif iq == 0:
            continue
        else:
            chi = (1 if ip in qr_p else -1) * (1 if iq in qr_q else -1)
            if chi == ones_on:
                mask |= 1 << i
    return BinarySeq(mask, n)
