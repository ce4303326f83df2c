"""Elementary number theory: primality, Legendre symbols, primitive roots,
sextic cyclotomic classes, and the CRT index map used by 4-way interleaving.

All operations are pure functions on plain integers; residues are always
normalized to [0, modulus).  Primality is a deterministic Miller-Rabin with
a fixed base set, exact far beyond the desk scale (< 2^64) used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

# Deterministic for all n < 3_317_044_064_679_887_385_961_981 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for nonnegative n."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {prime: exponent} by trial division (desk scale)."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _require_odd_prime(p: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def legendre_symbol(i: int, p: int) -> int:
    """Legendre symbol (i/p) in {-1, 0, +1} for an odd prime p."""
    _require_odd_prime(p)
    i %= p
    if i == 0:
        return 0
    e = pow(i, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo the odd prime p."""
    return next(primitive_roots(p))


def primitive_roots(p: int):
    """Yield all primitive roots mod p in increasing order."""
    _require_odd_prime(p)
    cofactors = [(p - 1) // q for q in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, c, p) != 1 for c in cofactors):
            yield g


def mod_inverse(s: int, n: int) -> int:
    """Inverse of s mod n in [1, n-1]; raises ValueError when gcd(s, n) > 1."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    g = math.gcd(s, n)
    if g != 1:
        raise ValueError(f"{s} is not invertible mod {n} (gcd = {g})")
    return pow(s, -1, n)


def crt_index(alpha: int, beta: int, n: int) -> int:
    """The unique i in [0, 4n) with i = alpha (mod 4) and i = beta (mod n).

    Computed as -alpha*n + 4*beta_star (mod 4n) where 4*beta_star = beta
    (mod n); n must be odd so that 4 is invertible.
    """
    if n % 2 == 0:
        raise ValueError("n must be odd")
    if not 0 <= alpha < 4:
        raise ValueError("alpha must lie in [0, 4)")
    if not 0 <= beta < n:
        raise ValueError("beta must lie in [0, n)")
    beta_star = 0 if n == 1 else beta * mod_inverse(4 % n, n) % n
    return (-alpha * n + 4 * beta_star) % (4 * n)


@dataclass(frozen=True)
class CyclotomicClasses:
    """Partition of {1, ..., p-1} into the six cosets g^k * <g^6>.

    classes[k] holds the k-th coset; classes[0] is the sixth powers.
    """

    p: int
    g: int
    classes: tuple[frozenset[int], ...]
    _labels: dict[int, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        for k, cls in enumerate(self.classes):
            for x in cls:
                self._labels[x] = k

    def label_of(self, x: int) -> int:
        """Index k with x in classes[k]; raises KeyError for x = 0 mod p."""
        return self._labels[x % self.p]


def cyclotomic_classes6(p: int, g: int | None = None) -> CyclotomicClasses:
    """Cyclotomic classes of order 6 mod p (requires p prime, p = 1 mod 6).

    The coset representatives are powers of g, by default the smallest
    primitive root; pass g explicitly to fix a different labeling.
    """
    _require_odd_prime(p)
    if (p - 1) % 6 != 0:
        raise ValueError(f"6 does not divide {p} - 1")
    if g is None:
        g = primitive_root(p)
    g6 = pow(g, 6, p)
    base = []
    x = 1
    for _ in range((p - 1) // 6):
        base.append(x)
        x = x * g6 % p
    classes = []
    for k in range(6):
        gk = pow(g, k, p)
        classes.append(frozenset(gk * d % p for d in base))
    return CyclotomicClasses(p=p, g=g, classes=tuple(classes))
