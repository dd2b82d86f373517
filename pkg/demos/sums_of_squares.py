"""
Counting sums of squares
========================

How many ways can an integer be written as an ordered sum of k squares,
and what changes when every square is required to be nonzero?
"""

from thetacharge import (
    brute_squares_table,
    four_squares_divisor,
    nonzero_squares_binomial,
    nonzero_squares_table,
    squares_table,
    squares_tables,
    three_squares_possible,
    two_squares_divisor,
)

# The counts come from powers of the basic one-dimensional theta series
# 1 + 2q + 2q^4 + 2q^9 + ...: the coefficient of q^N in its k-th power
# counts ordered k-tuples of integers whose squares sum to N.
NMAX = 30
for k in (2, 3, 4):
    table = squares_table(k, NMAX)
    print(f"k={k}:", " ".join(str(table[n]) for n in range(13)))

# Requiring every coordinate nonzero means expanding (theta - 1)^k instead.
print()
print("nonvanishing 4-square counts:",
      " ".join(str(nonzero_squares_table(4, 12)[n]) for n in range(13)))
# 3 has no such representation: four nonzero squares sum to at least 4.

# The same nonvanishing counts fall out of the plain ones by inclusion-
# exclusion over which coordinates vanish, a pure binomial sieve.
tables = squares_tables(4, NMAX)
sieve = [nonzero_squares_binomial(4, n, tables) for n in range(1, 13)]
print("same thing by sieve:          ", "0", " ".join(map(str, sieve)))

# Classical divisor formulas give the 2- and 4-square counts directly,
# with no series in sight; they agree coefficient by coefficient.
print()
for n in (90, 91, 92, 93):
    print(f"N={n}: r2 = {two_squares_divisor(n):3d}  r4 = {four_squares_divisor(n):4d}")

# Three squares are subtler: exactly the numbers 4^a (8b + 7) are missed.
misses = [n for n in range(1, 120) if not three_squares_possible(n)]
print()
print("not a sum of three squares:", misses)

# Everything above can be confirmed by brute force, which enumerates the
# tuples instead of multiplying series.  Slow but independent.
brute = brute_squares_table(3, 20)
series = squares_table(3, 20)
assert brute.counts == series.counts
print()
print("brute-force enumeration agrees with the series expansion up to N=20")
