"""Holonomy classes, bundle topology, and exact charge extrema.

An SU(n+1) conjugacy class is encoded by its sorted angle vector; the
topology of a twisted bundle over a surface complement by an instanton
number, monopole numbers, and the surface self-intersection.  The charge
functional is quadratic in the angles, so its critical values on each
integral level set have exact rational closed forms; this module emits
those candidates with a machine-checked substitution proof and backs
them with exact grid scans.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement


class HolonomyError(ValueError):
    """The angle vector does not describe a conjugacy class in the allowed region."""


def _fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("holonomy angles must be exact rationals, not floats")
    return Fraction(x)


@dataclass(frozen=True)
class HolonomyClass:
    """Sorted angle vector: 1 > alpha_0 >= ... >= alpha_n >= 0, integer sum."""

    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        alpha = tuple(_fraction(a) for a in self.alpha)
        if not alpha:
            raise HolonomyError("need at least one angle")
        if alpha[0] >= 1 or alpha[-1] < 0:
            raise HolonomyError("angles must lie in [0, 1)")
        for a, b in zip(alpha, alpha[1:]):
            if a < b:
                raise HolonomyError("angles must be sorted in nonincreasing order")
        total = sum(alpha)
        if total.denominator != 1:
            raise HolonomyError(f"angle sum {total} is not an integer")
        object.__setattr__(self, "alpha", alpha)

    @property
    def n(self) -> int:
        return len(self.alpha) - 1

    @property
    def level(self) -> int:
        """The integer value of the angle sum."""
        return int(sum(self.alpha))


def canonicalize_holonomy(raw) -> HolonomyClass:
    """Reduce angles mod 1 and sort; error if the reduced sum is not an integer."""
    vals = sorted((_fraction(r) % 1 for r in raw), reverse=True)
    return HolonomyClass(tuple(vals))


@dataclass(frozen=True)
class BundleTopology:
    """Instanton number k, monopole numbers l (summing to zero), self-intersection."""

    k: int
    l: tuple[int, ...]
    sigma: int

    def __post_init__(self):
        l = tuple(self.l)
        if not l:
            raise ValueError("need at least one monopole number")
        for e in l:
            if not isinstance(e, int):
                raise TypeError("monopole numbers must be integers")
        if sum(l) != 0:
            raise ValueError(f"monopole numbers must sum to zero, got {sum(l)}")
        object.__setattr__(self, "l", l)

    @property
    def n(self) -> int:
        return len(self.l) - 1


def charge_value(B: BundleTopology, alphas) -> Fraction:
    """The charge functional at a raw angle vector, with no region validation.

    k + sum(alpha_i l_i) - (1/2)(sum alpha_i^2) sigma.  Used directly for
    critical points that may fall outside the allowed region.
    """
    alphas = tuple(_fraction(a) for a in alphas)
    if len(alphas) != len(B.l):
        raise ValueError("angle vector length does not match the monopole numbers")
    cross = sum((a * li for a, li in zip(alphas, B.l)), Fraction(0))
    square = sum((a * a for a in alphas), Fraction(0))
    return B.k + cross - Fraction(B.sigma, 2) * square


def chern_weil_charge(B: BundleTopology, H: HolonomyClass) -> Fraction:
    """Exact rational charge of the bundle data against a holonomy class."""
    return charge_value(B, H.alpha)


def chern_simons(B: BundleTopology, H: HolonomyClass) -> Fraction:
    """Boundary term of the charge, reduced mod 1 into [0, 1)."""
    return (chern_weil_charge(B, H) - B.k) % 1


@dataclass(frozen=True)
class ExtremumCandidate:
    """One critical point of the charge on a stratum of the angle region.

    stratum is "interior" (angle sum pinned at level j, all angles free)
    or "boundary" (trailing angles pinned to zero, j angles kept, inner
    sum pinned at m).  kept names the surviving indices when a candidate
    comes from the optional all-subsets sweep.
    """

    stratum: str
    j: int
    m: "int | None"
    alpha_point: tuple[Fraction, ...]
    value: Fraction
    s_j: "int | None"
    feasible: bool
    kept: "tuple[int, ...] | None" = None


@dataclass(frozen=True)
class ChargeExtrema:
    """Candidate critical values plus the value k at the zero class."""

    base_value: int
    candidates: tuple[ExtremumCandidate, ...]

    def feasible_values(self) -> list[Fraction]:
        vals = [Fraction(self.base_value)]
        vals.extend(c.value for c in self.candidates if c.feasible)
        return vals

    def feasible_min(self) -> Fraction:
        return min(self.feasible_values())

    def feasible_max(self) -> Fraction:
        return max(self.feasible_values())


def _region_ok(alphas) -> bool:
    try:
        HolonomyClass(tuple(alphas))
    except HolonomyError:
        return False
    return True


def charge_extrema(B: BundleTopology, all_subsets: bool = False) -> ChargeExtrema:
    """Critical-value candidates of the charge over the angle region.

    Every candidate value is produced twice: once from its rational
    closed form and once by substituting the critical point back into
    the charge functional.  The two must agree exactly; a mismatch
    raises, since it would mean the closed forms are wrong.

    By default boundary candidates pin the trailing angles to zero, the
    way the strata are usually swept; all_subsets=True sweeps every
    proper subset of angles pinned to zero instead, re-indexing the
    monopole numbers accordingly.
    """
    sigma = B.sigma
    if sigma == 0:
        raise ValueError("charge extrema need nonzero self-intersection")
    n = B.n
    sum_l2 = sum(li * li for li in B.l)
    cands = []

    for j in range(1, n + 1):
        alpha = tuple(Fraction(li, sigma) + Fraction(j, n + 1) for li in B.l)
        closed = B.k + Fraction(sum_l2, 2 * sigma) - Fraction(j * j * sigma, 2 * (n + 1))
        value = charge_value(B, alpha)
        if value != closed:
            raise ArithmeticError(
                f"interior critical value mismatch at j={j}: closed {closed}, substituted {value}"
            )
        cands.append(ExtremumCandidate(
            "interior", j, None, alpha, value, None, _region_ok(alpha)))

    if all_subsets:
        kept_sets = [K for j in range(2, n + 1) for K in combinations(range(n + 1), j)]
    else:
        kept_sets = [tuple(range(j)) for j in range(2, n + 1)]

    for K in kept_sets:
        j = len(K)
        s = sum(B.l[i] for i in K)
        part_l2 = sum(B.l[i] * B.l[i] for i in K)
        for m in range(1, j):
            shift = Fraction(m, j) - Fraction(s, j * sigma)
            alpha = tuple(
                Fraction(B.l[i], sigma) + shift if i in K else Fraction(0)
                for i in range(n + 1)
            )
            closed = (B.k + Fraction(part_l2, 2 * sigma) - Fraction(m * m * sigma, 2 * j)
                      + Fraction(s, j) * (m - Fraction(s, 2 * sigma)))
            value = charge_value(B, alpha)
            if value != closed:
                raise ArithmeticError(
                    f"boundary critical value mismatch at j={j}, m={m}: "
                    f"closed {closed}, substituted {value}"
                )
            cands.append(ExtremumCandidate(
                "boundary", j, m, alpha, value, s, _region_ok(alpha),
                kept=K if all_subsets else None))

    return ChargeExtrema(B.k, tuple(cands))


@dataclass(frozen=True)
class GridScanResult:
    denominator: int
    minimum: Fraction
    maximum: Fraction
    argmin: tuple[Fraction, ...]
    argmax: tuple[Fraction, ...]


def charge_grid_scan(B: BundleTopology, denominator: int) -> GridScanResult:
    """Exact charge evaluation over every region point with angles in (1/D) Z.

    Enumerates nonincreasing angle vectors with entries a/D, 0 <= a < D,
    keeps those whose sum is an integer, and tracks exact extrema.  Ties
    keep the first point in enumeration order, so results are stable.
    """
    if B.sigma == 0:
        raise ValueError("grid scan needs nonzero self-intersection")
    if denominator < 1:
        raise ValueError("denominator must be positive")
    D = denominator
    n = B.n
    best_min = best_max = None
    arg_min = arg_max = None
    for numers in combinations_with_replacement(range(D - 1, -1, -1), n + 1):
        if sum(numers) % D != 0:
            continue
        alpha = tuple(Fraction(a, D) for a in numers)
        v = charge_value(B, alpha)
        if best_min is None or v < best_min:
            best_min, arg_min = v, alpha
        if best_max is None or v > best_max:
            best_max, arg_max = v, alpha
    # the zero vector always qualifies, so the scan is never empty
    return GridScanResult(D, best_min, best_max, arg_min, arg_max)
