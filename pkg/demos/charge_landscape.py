"""
The charge landscape
====================

Exact rational charges of singular connections: evaluation, the mod-1
boundary term, closed-form critical candidates, and grid scans over the
holonomy region.
"""

from fractions import Fraction as F

from thetacharge import (
    BundleTopology,
    HolonomyClass,
    charge_extrema,
    charge_grid_scan,
    chern_simons,
    chern_weil_charge,
)

# A bundle is (instanton number k, monopole numbers l summing to zero,
# self-intersection sigma); a holonomy class is a sorted vector of
# rational angles in [0,1) with integral sum.
B = BundleTopology(1, (2, -1, -1), 3)
H = HolonomyClass((F(2, 3), F(1, 3), F(0)))
print("charge:       ", chern_weil_charge(B, H))
print("boundary term:", chern_simons(B, H))

# With zero holonomy the charge is just k, whatever l and sigma do.
H0 = HolonomyClass((F(0), F(0), F(0)))
print("zero holonomy:", chern_weil_charge(B, H0))

# The critical candidates of the charge over the holonomy region come
# in closed form: interior ones indexed by the integral sum, boundary
# ones by how many angles stay nonzero.  Each candidate records its
# point, its value, and whether the point actually lies in the region.
print()
B = BundleTopology(0, (1, 0, -1), 3)
ext = charge_extrema(B)
print(f"base value {ext.base_value}; candidates:")
for c in ext.candidates:
    point = "(" + ", ".join(str(a) for a in c.alpha_point) + ")"
    tag = "feasible" if c.feasible else "outside region"
    print(f"  {c.stratum:8s} j={c.j} value {str(c.value):>6s} at {point}  [{tag}]")
print("feasible range:", ext.feasible_min(), "..", ext.feasible_max())

# A grid scan evaluates the charge at every admissible point with a
# fixed denominator.  Refining the denominator can only widen the
# observed range, and the zero point keeps k inside it.
print()
for d in (2, 4, 6, 12):
    scan = charge_grid_scan(B, d)
    print(f"denominator {d:2d}: min {str(scan.minimum):>7s}  max {str(scan.maximum):>6s}")

# The sign of sigma fixes which side the candidates control: here sigma
# is positive, so no feasible candidate can undercut the grid minimum.
scan = charge_grid_scan(B, 12)
assert all(v >= scan.minimum for v in ext.feasible_values())
print()
print("all feasible candidates sit on or above the 1/12 grid minimum")
