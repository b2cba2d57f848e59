"""Rigorous enclosure of the constant sum over primes of log p / (p(p-1)).

The constant drives the linear term of log rho(n).  The enclosure pairs a
partial sum over primes up to a tail cut with an explicit tail majorant, so
the true value is provably inside the interval, and widening the cut can only
raise the lower end and lower the upper end.
"""

from lcmf import prime_series_constant


def main():
    print("  tail cut        lo                  hi               width")
    for x in (1_000, 10_000, 100_000, 1_000_000, 10_000_000):
        enc = prime_series_constant(x)
        print(f"  {x:>9,d}   {enc.lo:.12f}   {enc.hi:.12f}   {enc.width:.3e}")
    enc = prime_series_constant(10_000_000)
    print(f"\n  midpoint at cut 1e7: {enc.midpoint:.9f} (+/- {enc.width / 2:.2e})")


if __name__ == "__main__":
    main()
