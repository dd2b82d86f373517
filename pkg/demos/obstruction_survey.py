"""
An obstruction survey
=====================

Arithmetic certificates that no irreducible representation exists:
scanning multiples of the self-intersection against nonvanishing
representation counts, across ranks and self-intersections.
"""

from fractions import Fraction as F

from thetacharge import (
    HolonomyClass,
    flat_constraints,
    obstruction_diagonal,
    obstruction_general,
    witness_enumerate,
)

# The diagonal scan asks whether any multiple of sigma below n sigma^2
# is a sum of n nonzero squares; the general scan uses the 2/1 form and
# the larger bound n(n+1)/2 sigma^2.  "Obstructed" is a certificate;
# "Inconclusive" just means the arithmetic test did not decide.
print("diagonal case, rank 1 (SU(2)):")
for sigma in range(2, 9):
    rep = obstruction_diagonal(1, sigma)
    ws = ", ".join(f"N={N}" for N, _ in rep.witnesses) or "none"
    print(f"  sigma={sigma}: {rep.verdict:13s} witnesses: {ws}")

print()
print("general case across ranks:")
for n in (1, 2, 3):
    row = []
    for sigma in range(2, 8):
        verdict = obstruction_general(n, sigma).verdict
        row.append("O" if verdict == "Obstructed" else ".")
    print(f"  SU({n + 1}): sigma=2..7 -> {' '.join(row)}")

# Witness vectors are the concrete monopole data that defeat the scan:
# entries strictly between 0 and sigma in absolute value, sharing its
# sign, whose quadratic value is divisible by sigma.
print()
for n, sigma in [(1, 4), (2, 3), (2, 5)]:
    vecs = witness_enumerate(n, sigma)
    print(f"n={n} sigma={sigma}: {len(vecs)} witness vectors {vecs[:4]}")

# Flatness forces the monopole numbers from the holonomy angles.  The
# diagnostics report what fails rather than raising: here the forced
# l-vector cannot sum to zero, which is the tension the scans exploit.
print()
sol = flat_constraints(HolonomyClass((F(1, 2), F(1, 2))), 4)
forced = "(" + ", ".join(str(v) for v in sol.l) + ")"
print("alpha = (1/2, 1/2), sigma = 4 forces l =", forced, "and k =", sol.k)
d = sol.diagnostics
print(f"diagnostics: l integral {d.l_integral}, l sums to zero {d.l_sum_zero}, "
      f"k integral {d.k_integral}")
