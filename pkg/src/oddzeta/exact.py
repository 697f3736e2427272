"""Exact integer and rational primitives: factorials, binomials, prime powers,
and the lcm(1..n) table with its prime-power increment law.

Everything here is pure, immutable after construction, and computed in exact
arbitrary-precision arithmetic (no floating point anywhere).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Exact rational backbone. fractions.Fraction already guarantees the two
# invariants we need: positive denominator and gcd(|num|, den) == 1 on
# construction.
Rational = Fraction

# Witnesses making Miller-Rabin deterministic for n < 3.317e24, far beyond
# the ranges this package sweeps.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def factorial(k: int) -> int:
    """k! as an exact integer; k must be >= 0."""
    if k < 0:
        raise ValueError(f"factorial requires k >= 0, got {k}")
    return math.factorial(k)


def binomial(n: int, r: int) -> int:
    """C(n, r) as an exact integer; requires 0 <= r <= n."""
    if n < 0 or r < 0:
        raise ValueError(f"binomial requires n, r >= 0, got n={n}, r={r}")
    if r > n:
        raise ValueError(f"binomial requires r <= n, got n={n}, r={r}")
    return math.comb(n, r)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (fixed witness set, valid for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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


def integer_root(n: int, g: int) -> int:
    """Largest r with r**g <= n, for n >= 0, g >= 1 (exact, no floats)."""
    if n < 0 or g < 1:
        raise ValueError("integer_root requires n >= 0 and g >= 1")
    if g == 1 or n < 2:
        return n
    if g == 2:
        return math.isqrt(n)
    # Newton iteration on integers, seeded from the bit length.
    r = 1 << (n.bit_length() // g + 1)
    while True:
        nxt = ((g - 1) * r + n // r ** (g - 1)) // g
        if nxt >= r:
            break
        r = nxt
    while r ** g > n:
        r -= 1
    return r


@dataclass(frozen=True)
class PrimePower:
    """A representation n = p**gamma with p prime and gamma >= 1."""

    p: int
    gamma: int

    @property
    def value(self) -> int:
        return self.p ** self.gamma


def is_prime_power(n: int) -> PrimePower | None:
    """Return (p, gamma) with n = p**gamma if n >= 2 is a prime power, else None."""
    if n < 2:
        raise ValueError(f"is_prime_power requires n >= 2, got {n}")
    for gamma in range(n.bit_length(), 0, -1):
        root = integer_root(n, gamma)
        if root ** gamma == n and is_prime(root):
            return PrimePower(root, gamma)
    return None


@dataclass(frozen=True)
class LcmTable:
    """The sequence d_n = lcm(1, ..., n) for 1 <= n <= max_n."""

    max_n: int
    values: tuple[int, ...]

    def d(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise ValueError(f"n must be in [1, {self.max_n}], got {n}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return self.max_n


def lcm_table(max_n: int) -> LcmTable:
    """Build d_1..d_max_n incrementally: d_{n} = p * d_{n-1} exactly when
    n = p**gamma, else d_n = d_{n-1}.

    This is O(1) big-integer work per step; the direct fold is kept in
    lcm_table_direct as an independent oracle.
    """
    if max_n < 1:
        raise ValueError(f"lcm_table requires max_n >= 1, got {max_n}")
    values = [1]
    for n in range(2, max_n + 1):
        pp = is_prime_power(n)
        values.append(values[-1] * pp.p if pp is not None else values[-1])
    return LcmTable(max_n, tuple(values))


def lcm_table_direct(max_n: int) -> LcmTable:
    """d_1..d_max_n by direct pairwise lcm folding (oracle for lcm_table)."""
    if max_n < 1:
        raise ValueError(f"lcm_table_direct requires max_n >= 1, got {max_n}")
    values = [1]
    for n in range(2, max_n + 1):
        values.append(math.lcm(values[-1], n))
    return LcmTable(max_n, tuple(values))
