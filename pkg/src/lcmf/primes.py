"""Sieve-backed prime infrastructure.

Provides a growable prime table with the prime-counting function pi(x),
the Chebyshev log-sum theta(x) = sum of log p over primes p <= x,
base-b digit sums, and the exponent of a prime in n! (computed two
independent ways and cross-asserted).
"""

from __future__ import annotations

import math
import os
from typing import Iterator

import numpy as np

DEFAULT_LIMIT = 1 << 20
DEFAULT_BLOCK_SIZE = 1 << 20
SPF_CAP_DEFAULT = 10_000_000

# deterministic Miller-Rabin witness set for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _env_default_limit() -> int:
    raw = os.environ.get("LCMF_SIEVE_LIMIT")
    if raw:
        try:
            return max(4, int(raw))
        except ValueError:
            pass
    return DEFAULT_LIMIT


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _simple_sieve(limit: int) -> np.ndarray:
    """Boolean primality bitmap over [0, limit]."""
    if limit < 1:
        limit = 1
    bitmap = np.ones(limit + 1, dtype=bool)
    bitmap[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if bitmap[p]:
            bitmap[p * p :: p] = False
    return bitmap


class PrimeTable:
    """Primality bitmap plus prime/log-prime arrays, grown on demand.

    The bitmap is produced block by block (block size configurable) and the
    cumulative theta value at each block boundary is recorded alongside the
    per-prime prefix sums used by theta()/pi().
    """

    def __init__(self, limit: int | None = None, block_size: int = DEFAULT_BLOCK_SIZE):
        if limit is None:
            limit = _env_default_limit()
        self.block_size = int(block_size)
        if self.block_size < 4:
            raise ValueError("block size too small")
        self._build(max(4, int(limit)))

    def _build(self, limit: int) -> None:
        bitmap = np.zeros(limit + 1, dtype=bool)
        base = _simple_sieve(math.isqrt(limit) + 1)
        base_primes = np.flatnonzero(base)
        lo = 0
        while lo <= limit:
            hi = min(lo + self.block_size, limit + 1)  # exclusive
            seg = np.ones(hi - lo, dtype=bool)
            if lo == 0:
                seg[: min(2, hi)] = False
            for p in base_primes:
                p = int(p)
                start = max(p * p, ((lo + p - 1) // p) * p)
                if start >= hi:
                    continue
                seg[start - lo :: p] = False
            bitmap[lo:hi] = seg
            lo = hi
        self.limit = limit
        self._is_prime = bitmap
        self._primes = np.flatnonzero(bitmap).astype(np.int64)
        self._log_primes = np.log(self._primes.astype(np.float64))
        # prefix[i] = sum of log over the first i primes, ascending order
        prefix = np.empty(len(self._primes) + 1, dtype=np.float64)
        prefix[0] = 0.0
        np.cumsum(self._log_primes, out=prefix[1:])
        self._theta_prefix = prefix
        bounds = np.arange(self.block_size, limit + 1, self.block_size, dtype=np.int64)
        idx = np.searchsorted(self._primes, bounds, side="right")
        self.theta_checkpoints = list(zip(bounds.tolist(), self._theta_prefix[idx].tolist()))

    def ensure(self, limit: int) -> None:
        """Grow the table (at least doubling) so that limit is covered."""
        limit = int(limit)
        if limit > self.limit:
            self._build(max(limit, 2 * self.limit))

    # -- queries ------------------------------------------------------------

    def is_prime(self, n: int) -> bool:
        n = int(n)
        if n <= self.limit:
            return bool(self._is_prime[n]) if n >= 0 else False
        return is_probable_prime(n)

    def primes_up_to(self, x: float) -> np.ndarray:
        """Ascending int64 array of all primes <= floor(x)."""
        if x < 2:
            return self._primes[:0]
        bound = math.floor(x)
        self.ensure(bound)
        idx = int(np.searchsorted(self._primes, bound, side="right"))
        return self._primes[:idx]

    def primes_and_logs(self, x: float) -> tuple[np.ndarray, np.ndarray]:
        """(primes <= x, their logs) as aligned array views."""
        ps = self.primes_up_to(x)
        return ps, self._log_primes[: len(ps)]

    def pi(self, x: float) -> int:
        """Number of primes <= x."""
        if x < 2:
            return 0
        bound = math.floor(x)
        self.ensure(bound)
        return int(np.searchsorted(self._primes, bound, side="right"))

    def theta(self, x: float) -> float:
        """Sum of log p over primes p <= x (ascending summation order)."""
        if x < 2:
            return 0.0
        bound = math.floor(x)
        self.ensure(bound)
        idx = int(np.searchsorted(self._primes, bound, side="right"))
        return float(self._theta_prefix[idx])

    def theta_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized theta over an array of integer arguments <= limit."""
        idx = np.searchsorted(self._primes, xs, side="right")
        return self._theta_prefix[idx]

    def prime_mask(self, limit: int) -> np.ndarray:
        """Primality bitmap view over [0, limit], for bulk membership tests."""
        self.ensure(limit)
        return self._is_prime[: limit + 1]

    def iter_segments(self, lo: int, hi: int, block_size: int | None = None) -> Iterator[np.ndarray]:
        """Yield the primes in [lo, hi] one block at a time.

        Generates segments independently of the stored bitmap, so callers can
        stream ranges beyond the table limit without growing it.
        """
        lo = max(2, int(lo))
        hi = int(hi)
        block = block_size or self.block_size
        base = _simple_sieve(math.isqrt(max(hi, 4)) + 1)
        base_primes = np.flatnonzero(base)
        start = lo
        while start <= hi:
            stop = min(start + block - 1, hi)
            seg = np.ones(stop - start + 1, dtype=bool)
            for p in base_primes:
                p = int(p)
                if p * p > stop:
                    break
                first = max(p * p, ((start + p - 1) // p) * p)
                if first <= stop:
                    seg[first - start :: p] = False
            yield (start + np.flatnonzero(seg)).astype(np.int64)
            start = stop + 1


_default_table: PrimeTable | None = None


def default_table() -> PrimeTable:
    global _default_table
    if _default_table is None:
        _default_table = PrimeTable()
    return _default_table


def _table(table: PrimeTable | None) -> PrimeTable:
    return table if table is not None else default_table()


# -- digit sums and factorial valuations -------------------------------------


def digit_sum(n: int, base: int) -> int:
    """Sum of the base-b digits of n (n >= 0, b >= 2)."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    while n:
        n, r = divmod(n, base)
        total += r
    return total


def factorial_valuation(n: int, p: int, table: PrimeTable | None = None) -> int:
    """Exponent of the prime p in n!.

    Evaluates the floor-quotient sum over powers of p and cross-asserts it
    against the base-p digit form (n - digit_sum(n, p)) // (p - 1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not _table(table).is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    alt, rem = divmod(n - digit_sum(n, p), p - 1)
    if rem != 0 or alt != total:
        raise AssertionError(f"factorial valuation routes disagree at n={n}, p={p}")
    return total


# -- factorization plumbing ---------------------------------------------------


class _SpfTable:
    """Smallest-prime-factor table, grown on demand up to a cap."""

    def __init__(self, cap: int = SPF_CAP_DEFAULT):
        self.cap = cap
        self.limit = 0
        self._spf = np.zeros(1, dtype=np.int32)

    def ensure(self, n: int) -> bool:
        if n <= self.limit:
            return True
        if n > self.cap:
            return False
        limit = min(self.cap, max(n, 2 * self.limit, 1 << 16))
        spf = np.zeros(limit + 1, dtype=np.int32)
        for p in range(2, math.isqrt(limit) + 1):
            if spf[p] == 0:
                sl = spf[p * p :: p]
                sl[sl == 0] = p
        ids = np.flatnonzero(spf[2:] == 0) + 2
        spf[ids] = ids
        self._spf = spf
        self.limit = limit
        return True

    def factorize(self, n: int) -> dict[int, int]:
        factors: dict[int, int] = {}
        spf = self._spf
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
        return factors


_spf = _SpfTable()


def factorize(n: int, table: PrimeTable | None = None) -> dict[int, int]:
    """Prime factorization of n >= 1 as an ascending {prime: exponent} dict.

    Uses the smallest-prime-factor table when n fits under its cap, and
    trial division by sieved primes otherwise.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return {}
    if _spf.ensure(n):
        return _spf.factorize(n)
    t = _table(table)
    factors: dict[int, int] = {}
    for p in t.primes_up_to(math.isqrt(n)):
        p = int(p)
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    if n > 1:
        factors[n] = 1
    return factors


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of n."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
