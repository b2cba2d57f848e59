"""The q(n, k) triangle and its frozen diagonals.

q(n, k) is the lcm of products of exactly k positive integers summing to at
most n.  Walking a diagonal d(n, k) = q(n + k, k) only ever multiplies in new
factors, and after k = n nothing new can appear: every admissible multiset
already reduces to one with at most n parts above 1.  The frozen value d(n, n)
is the sigma sequence in disguise.
"""

from lcmf import sigma, sigma_from_diagonal
from lcmf.triangle import diagonal, rows_decimal


def main():
    print("== triangle rows, n = 0..9 ==")
    for n, row in enumerate(rows_decimal(9)):
        print(f"  n={n:2d}: " + "  ".join(f"{v:>5s}" for v in row))

    print("\n== a diagonal freezes at k = n (here n = 4) ==")
    for k in range(10):
        mark = "  <- frozen from here" if k == 4 else ""
        print(f"  d(4,{k}) = {diagonal(4, k).to_decimal():>6s}{mark}")

    print("\n== frozen diagonals reproduce sigma ==")
    for n in range(11):
        via_diag = sigma_from_diagonal(n)
        direct = sigma(n)
        tick = "ok" if via_diag == direct else "MISMATCH"
        print(f"  n={n:2d}: q({2*n},{n}) = {via_diag.to_decimal():>10s} = sigma({n})  [{tick}]")


if __name__ == "__main__":
    main()
