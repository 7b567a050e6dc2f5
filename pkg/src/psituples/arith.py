"""Exact integer arithmetic: factorization sieve, Dedekind psi, integer k-th roots.

Everything downstream (tuple verification, searches, obstruction reports)
consumes these primitives.  All functions are pure; a built sieve is
immutable and safe to share across threads and processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Factorization",
    "PsiSieve",
    "build_sieve",
    "factorize",
    "psi",
    "int_kth_root",
    "is_perfect_kth_power",
]


@dataclass(frozen=True, slots=True)
class Factorization:
    """Prime-exponent form n = p1^a1 * ... * pr^ar, primes strictly increasing.

    n == 1 has an empty factor list.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def odd_primes(self) -> tuple[int, ...]:
        """Distinct odd primes (the odd radical's support)."""
        return tuple(p for p, _ in self.factors if p != 2)

    def two_exponent(self) -> int:
        """Exponent of 2 in n (0 when n is odd)."""
        for p, a in self.factors:
            if p == 2:
                return a
        return 0


@dataclass(frozen=True)
class PsiSieve:
    """Smallest-prime-factor and psi tables for 1..limit.

    spf is uint32 with spf[1] == 1 as a sentinel; psi is uint64 with
    psi[1] == 1.  Storage is about 12 bytes per entry.  Arrays are marked
    read-only after construction.
    """

    limit: int
    spf: np.ndarray
    psi: np.ndarray

    def psi_at(self, n: int) -> int:
        """psi(n) as a plain Python int; n must be within the sieve."""
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside sieve range 1..{self.limit}")
        return int(self.psi[n])

    def spf_at(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside sieve range 1..{self.limit}")
        return int(self.spf[n])

    def max_psi(self) -> int:
        """Largest psi value on 1..limit (used to size search tables)."""
        return int(self.psi[1:].max()) if self.limit >= 1 else 1


def build_sieve(limit: int) -> PsiSieve:
    """Build the shared sieve for 1..limit in O(N log log N).

    psi is computed multiplicatively: every n starts at n, and each prime
    p <= limit rescales all of its multiples by (p+1)/p.  The division is
    exact at every step because each multiple of p still carries the
    factor p when its turn comes.
    """
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    spf = np.zeros(limit + 1, dtype=np.uint32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.arange(limit + 1, dtype=np.uint32)
    unmarked = spf == 0
    spf[unmarked] = idx[unmarked]  # primes, plus the 0/1 sentinels

    psi_vals = np.arange(limit + 1, dtype=np.uint64)
    primes = np.flatnonzero(spf == idx)
    for p in primes[2:].tolist():  # skip the 0 and 1 sentinel hits
        view = psi_vals[p::p]
        np.floor_divide(view, p, out=view)
        view *= p + 1
    spf.flags.writeable = False
    psi_vals.flags.writeable = False
    return PsiSieve(limit=limit, spf=spf, psi=psi_vals)


def _factorize_trial(n: int) -> Factorization:
    """Trial division up to sqrt(n); fine for spot checks of table entries."""
    original = n
    factors: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            factors.append((p, a))
    d = 5
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            factors.append((d, a))
        d += 2 if d % 6 == 5 else 4  # skip multiples of 2 and 3
    if n > 1:
        factors.append((n, 1))
    return Factorization(original, tuple(factors))


def factorize(n: int, sieve: PsiSieve | None = None) -> Factorization:
    """Factor n into (prime, exponent) pairs with primes increasing.

    With a sieve the factorization walks the spf chain; without one it
    falls back to trial division.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n == 1:
        return Factorization(1, ())
    if sieve is None:
        return _factorize_trial(n)
    if n > sieve.limit:
        raise ValueError(f"n={n} exceeds sieve limit {sieve.limit}")
    spf = sieve.spf
    factors: list[tuple[int, int]] = []
    m = n
    while m > 1:
        p = int(spf[m])
        a = 0
        while m % p == 0:
            m //= p
            a += 1
        factors.append((p, a))
    return Factorization(n, tuple(factors))


def psi(n: int, sieve: PsiSieve | None = None) -> int:
    """Dedekind psi: psi(n) = n * prod(1 + 1/p) over distinct primes p | n.

    psi(1) == 1.  Exact for any positive n; uses the sieve when it covers n.
    """
    if n < 1:
        raise ValueError("psi requires n >= 1")
    if sieve is not None and n <= sieve.limit:
        return int(sieve.psi[n])
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p + 1)
    return result


def int_kth_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) exactly, for k in 2..5 and x >= 0.

    Float seed plus integer Newton correction; the final compare loops
    guarantee result**k <= x < (result+1)**k regardless of seed error.
    """
    if k not in (2, 3, 4, 5):
        raise ValueError("k must be in 2..5")
    if x < 0:
        raise ValueError("x must be nonnegative")
    if k == 2:
        return math.isqrt(x)
    if x == 0:
        return 0
    try:
        r = int(float(x) ** (1.0 / k))
    except OverflowError:
        r = 1 << -(-x.bit_length() // k)
    if r == 0:
        r = 1
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def is_perfect_kth_power(x: int, k: int) -> int | None:
    """The exact k-th root of x when x = r**k, otherwise None."""
    r = int_kth_root(x, k)
    return r if r**k == x else None
