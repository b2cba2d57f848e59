"""The rho and sigma sequences and their arithmetic structure.

rho(n) is the product over primes p of p**(n // p); sigma(n) the product of
p**(n // (p - 1)).  Both divide into a web of exact relations — divisibility
chains, factorial sandwiches, and a two-valued valuation dichotomy for
sigma(n)/n! at primes p with p*p > n + 1 — that this module computes and
cross-checks by independent routes.

Boundary comparisons against sqrt(n + 1) are done in integer arithmetic
(p > sqrt(n+1) iff p*p > n+1), and the quotient values floor(n/k + 1) are
computed as (n + k) // k, so no float ever decides a sharp range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import primes as _primes
from .factored import FactoredNatural
from .primes import PrimeTable


def _exponents_rho(n: int, t: PrimeTable) -> tuple[np.ndarray, np.ndarray]:
    ps = t.primes_up_to(n)
    return ps, n // ps


def _exponents_sigma(n: int, t: PrimeTable) -> tuple[np.ndarray, np.ndarray]:
    ps = t.primes_up_to(n + 1)
    return ps, n // (ps - 1)


def _legendre_vector(n: int, ps: np.ndarray) -> np.ndarray:
    """Exponent of each prime in n! (floor-quotient sums, vectorized)."""
    total = np.zeros(len(ps), dtype=np.int64)
    pw = ps.copy()
    while True:
        mask = pw <= n
        if not mask.any():
            return total
        total[mask] += n // pw[mask]
        pw[mask] *= ps[mask]


def _as_factored(ps: np.ndarray, exps: np.ndarray) -> FactoredNatural:
    keep = exps > 0
    return FactoredNatural._trusted(
        dict(zip(ps[keep].tolist(), exps[keep].tolist()))
    )


def rho(n: int, table: PrimeTable | None = None) -> FactoredNatural:
    """Product over primes p <= n of p**(n // p)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _as_factored(*_exponents_rho(n, _primes._table(table)))


def sigma(n: int, table: PrimeTable | None = None) -> FactoredNatural:
    """Product over primes p <= n + 1 of p**(n // (p - 1))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _as_factored(*_exponents_sigma(n, _primes._table(table)))


# -- incremental streams ---------------------------------------------------------


def rho_stream(nmax: int, table: PrimeTable | None = None):
    """Yield (n, delta) for n = 1..nmax, delta the exponent increment of rho.

    The exponent of p grows by one exactly when p divides n, so the delta at
    step n is the product of the distinct prime factors of n (as a
    FactoredNatural); multiplying the deltas together recovers rho(nmax).
    """
    t = _primes._table(table)
    t.ensure(nmax + 1)
    for n in range(1, nmax + 1):
        yield n, FactoredNatural._trusted({p: 1 for p in _primes.factorize(n, t)})


def sigma_stream(nmax: int, table: PrimeTable | None = None):
    """Yield (n, delta) for sigma: p gains one exactly when p - 1 divides n."""
    t = _primes._table(table)
    t.ensure(nmax + 2)
    for n in range(1, nmax + 1):
        delta = {}
        for d in _primes.divisors(n):
            if t.is_prime(d + 1):
                delta[d + 1] = 1
        yield n, FactoredNatural._trusted(delta)


def accumulate_stream(stream) -> FactoredNatural:
    """Fold a delta stream into the final factored value."""
    total = FactoredNatural.one()
    for _, delta in stream:
        total = total.multiply(delta)
    return total


# -- divisibility checks ----------------------------------------------------------


def divisibility_chain(n: int, table: PrimeTable | None = None) -> tuple[bool, bool, bool, bool]:
    """Four exact facts about rho/sigma at n, as booleans (False is data).

    (a) rho(n) | rho(n+1), sigma(n) | sigma(n+1), rho(n) | sigma(n);
    (b) rho(n) | n!;
    (c) n! | sigma(n) and sigma(n) | (2n)!;
    (d) for odd n, sigma(n) = 2 * sigma(n-1)  (vacuously true for even n).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    t = _primes._table(table)
    ps = t.primes_up_to(max(2 * n, n + 2, 2))
    rho_n = n // ps
    rho_n1 = (n + 1) // ps
    sig_n = n // (ps - 1)
    sig_n1 = (n + 1) // (ps - 1)
    fact_n = _legendre_vector(n, ps)
    fact_2n = _legendre_vector(2 * n, ps)

    chain = bool(
        np.all(rho_n <= rho_n1) and np.all(sig_n <= sig_n1) and np.all(rho_n <= sig_n)
    )
    into_factorial = bool(np.all(rho_n <= fact_n))
    sandwich = bool(np.all(fact_n <= sig_n) and np.all(sig_n <= fact_2n))
    if n % 2 == 1:
        sig_prev = (n - 1) // (ps - 1)
        doubling = bool(np.all(sig_n == sig_prev + (ps == 2)))
    else:
        doubling = True
    return chain, into_factorial, sandwich, doubling


def factorial_sandwich(n: int, table: PrimeTable | None = None) -> tuple[bool, bool]:
    """Whether (n+1)! | sigma(n) and sigma(n) | n! * lcm(1..n+1).

    Checked prime by prime through the floor-quotient reduction: with e the
    largest exponent such that p**e <= n + 1,
        sum_i floor((n+1)/p**i)  <=  floor(n/(p-1))  <=  sum_i floor(n/p**i) + e.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    t = _primes._table(table)
    ps = t.primes_up_to(n + 1)
    if len(ps) == 0:
        return True, True
    left = _legendre_vector(n + 1, ps)
    mid = n // (ps - 1)
    e = np.zeros(len(ps), dtype=np.int64)
    pw = ps.copy()
    while True:
        mask = pw <= n + 1
        if not mask.any():
            break
        e[mask] += 1
        pw[mask] *= ps[mask]
    right = _legendre_vector(n, ps) + e
    return bool(np.all(left <= mid)), bool(np.all(mid <= right))


# -- the valuation dichotomy -------------------------------------------------------


@dataclass(frozen=True)
class ValuationRecord:
    """Valuation of sigma(n)/n! at a prime p with p*p > n+1, p <= n+1.

    valuation is 0 or 1, and equals 1 exactly when p = floor(n/k + 1) for
    some positive k with (k-1)**2 <= n; witness_k is that k when present.
    """

    n: int
    p: int
    valuation: int
    witness_k: int | None

    def csv_row(self) -> str:
        w = "" if self.witness_k is None else str(self.witness_k)
        return f"{self.n},{self.p},{self.valuation},{w}"


VALUATION_CSV_HEADER = "n,p,v,witness_k"


def sigma_ratio_valuation(n: int, p: int, table: PrimeTable | None = None) -> ValuationRecord:
    """Compute the valuation of sigma(n)/n! at p by two independent routes.

    Route one reads the two base-p digits of n (n < p*p - 1 holds in range)
    and takes floor(digit sum / (p - 1)).  Route two searches for a witness
    k with p = (n + k) // k in the admissible k range.  The routes must
    agree; disagreement raises.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    t = _primes._table(table)
    if not t.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p * p <= n + 1 or p > n + 1:
        raise ValueError(f"p = {p} outside the range sqrt(n+1) < p <= n+1 for n = {n}")

    a1, a0 = divmod(n, p)
    v_digits = (a0 + a1) // (p - 1)

    witness = None
    k = 1
    while (k - 1) * (k - 1) <= n:
        if (n + k) // k == p:
            witness = k
            break
        k += 1
    v_witness = 1 if witness is not None else 0

    if v_digits != v_witness:
        raise ArithmeticError(
            f"valuation routes disagree at n={n}, p={p}: digits {v_digits}, witness {v_witness}"
        )
    return ValuationRecord(n=n, p=p, valuation=v_digits, witness_k=witness)


@dataclass(frozen=True)
class QuotientPrimes:
    """Primes of the form floor(n/k + 1) over a k range, with their k's.

    The narrow variant takes k <= sqrt(n); the wide one k < sqrt(n+1) + 1.
    The quotient values are pairwise distinct over the range, so the member
    count equals the number of qualifying k.
    """

    n: int
    wide: bool
    members: frozenset[int]
    generating_k: dict[int, int]


def quotient_primes(n: int, wide: bool = False, table: PrimeTable | None = None) -> QuotientPrimes:
    """The set of primes floor(n/k + 1) for k in the chosen range."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t = _primes._table(table)
    t.ensure(n + 2)
    kmax = math.isqrt(n) + 1 if wide else math.isqrt(n)
    values = [(n + k) // k for k in range(1, kmax + 1)]
    if len(set(values)) != len(values):
        raise ArithmeticError(f"quotient values not distinct at n={n}")
    gen = {v: k for k, v in enumerate(values, start=1) if t.is_prime(v)}
    return QuotientPrimes(n=n, wide=wide, members=frozenset(gen), generating_k=gen)


def split_sigma_over_factorial(
    n: int, table: PrimeTable | None = None
) -> tuple[float, FactoredNatural]:
    """Split sigma(n)/n! at sqrt(n+1) into (log of small part, large part).

    The small part collects primes with p*p <= n+1; the large part is exactly
    the product of the wide quotient primes exceeding sqrt(n+1), each to the
    first power — this is asserted, not assumed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    t = _primes._table(table)
    ps, sig = _exponents_sigma(n, t)
    v = sig - _legendre_vector(n, ps)
    if v.min(initial=0) < 0:
        raise ArithmeticError(f"sigma({n}) is not a multiple of {n}!")
    small = ps * ps <= n + 1
    large_ps = ps[~small]
    large_v = v[~small]
    nonzero = large_v > 0
    if not np.all(large_v[nonzero] == 1):
        raise ArithmeticError(f"large-prime valuation above 1 at n={n}")
    got = set(large_ps[nonzero].tolist())
    expected = {
        p for p in quotient_primes(n, wide=True, table=t).members if p * p > n + 1
    }
    if got != expected:
        raise ArithmeticError(f"large part mismatch at n={n}: {got} vs {expected}")
    small_log = 0.0
    for p, e in zip(ps[small].tolist(), v[small].tolist()):
        if e:
            small_log += e * math.log(p)
    return small_log, FactoredNatural._trusted({p: 1 for p in sorted(got)})
