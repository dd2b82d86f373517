"""Flat-connection constraints and the irreducible-representation obstruction.

A flat twisted connection over a surface complement forces exact linear
and quadratic relations between the holonomy angles, the monopole
numbers, and the instanton number.  Running those relations against
representation counts yields a finite decision procedure: if no integer
in a bounded window that the self-intersection divides admits an
all-nonzero representation of the relevant quadratic type, irreducible
flat SU(n+1) connections are ruled out; one witness makes the test
inconclusive.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .gauge import HolonomyClass
from .repnum import an_form, nonzero_form_count, nonzero_squares_table


@dataclass(frozen=True)
class FlatDiagnostics:
    """Integrality and balance checks a genuine flat connection must pass."""

    l_integral: bool
    l_sum_zero: bool
    k_integral: bool

    @property
    def consistent(self) -> bool:
        return self.l_integral and self.l_sum_zero and self.k_integral


@dataclass(frozen=True)
class FlatSolution:
    """Monopole and instanton data forced by flatness; never silently rounded.

    l and k are kept as exact rationals; the diagnostics record which of
    the integrality and balance constraints hold.  Violations are
    reported, not raised: the caller decides what a failed diagnostic
    means for the geometry.
    """

    alpha: HolonomyClass
    sigma: int
    l: tuple[Fraction, ...]
    k: Fraction
    diagnostics: FlatDiagnostics

    @property
    def consistent(self) -> bool:
        return self.diagnostics.consistent


def flat_constraints(H: HolonomyClass, sigma: int) -> FlatSolution:
    """Monopole numbers l_i = alpha_i sigma and the forced instanton number.

    For nonzero sigma, k = -(sum l_i^2) / (2 sigma); zero self-intersection
    forces k and every l_i to vanish.
    """
    if sigma == 0:
        zeros = tuple(Fraction(0) for _ in H.alpha)
        return FlatSolution(H, 0, zeros, Fraction(0),
                            FlatDiagnostics(True, True, True))
    l = tuple(a * sigma for a in H.alpha)
    k = -sum((li * li for li in l), Fraction(0)) / (2 * sigma)
    diags = FlatDiagnostics(
        l_integral=all(li.denominator == 1 for li in l),
        l_sum_zero=sum(l) == 0,
        k_integral=k.denominator == 1,
    )
    return FlatSolution(H, sigma, l, k, diags)


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of one obstruction scan.

    Witnesses are the scanned integers with a nonzero count, as (N, count)
    pairs; the verdict is "Obstructed" exactly when there are none.  The
    hypotheses list spells out what the verdict actually asserts, so an
    Obstructed report never claims more than the scan established.
    """

    group_rank: int
    sigma: int
    case: str
    bound: int
    witnesses: tuple[tuple[int, int], ...]
    verdict: str
    hypotheses: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "group": f"SU({self.group_rank + 1})",
            "sigma": self.sigma,
            "case": self.case,
            "bound": self.bound,
            "witnesses": [{"N": N, "count": c} for N, c in self.witnesses],
            "verdict": self.verdict,
            "hypotheses": list(self.hypotheses),
        }


def _hypotheses(n: int, sigma: int, case: str) -> tuple[str, ...]:
    common = (
        "ambient four-manifold simply connected",
        "surface closed, oriented, smoothly embedded",
        f"surface self-intersection {sigma} (nonzero)",
        f"structure group SU({n + 1}), irreducible representations only",
    )
    if case == "diagonal":
        return common + ("reducible locus diagonal: off-diagonal monopole products vanish",)
    return common


def _scan(n: int, sigma: int, case: str, bound: int, counts) -> ObstructionReport:
    step = abs(sigma)
    witnesses = []
    for N in range(step, bound, step):
        c = counts(N)
        if c > 0:
            witnesses.append((N, c))
    verdict = "Obstructed" if not witnesses else "Inconclusive"
    return ObstructionReport(n, sigma, case, bound, tuple(witnesses), verdict,
                             _hypotheses(n, sigma, case))


def obstruction_diagonal(n: int, sigma: int) -> ObstructionReport:
    """Obstruction scan in the diagonal case: nonvanishing sums of n squares.

    Scans every multiple of |sigma| below n sigma^2; a multiple that is a
    sum of n nonzero squares is a witness.  No witness means no diagonal
    monopole data can satisfy the flatness constraints.
    """
    _check(n, sigma)
    bound = n * sigma * sigma
    table = nonzero_squares_table(n, bound - 1)
    return _scan(n, sigma, "diagonal", bound, lambda N: table[N])


def obstruction_general(n: int, sigma: int) -> ObstructionReport:
    """Obstruction scan in the general case: nonvanishing counts of the 2/1 form.

    Scans every multiple of |sigma| below n(n+1)/2 sigma^2 against the
    all-nonzero representation counts of the rank-n Gram matrix with 2 on
    the diagonal and 1 elsewhere.
    """
    _check(n, sigma)
    bound = n * (n + 1) // 2 * sigma * sigma
    Q = an_form(n)
    return _scan(n, sigma, "general", bound, lambda N: nonzero_form_count(Q, N))


def _check(n: int, sigma: int):
    if n < 1:
        raise ValueError("n must be at least 1")
    if sigma == 0:
        raise ValueError("the obstruction scan needs nonzero self-intersection")


def witness_enumerate(n: int, sigma: int, both_signs: bool = False) -> list[tuple[int, ...]]:
    """Monopole vectors that defeat the general obstruction at this (n, sigma).

    Enumerates l in Z^n with 0 < |l_i| < |sigma| and, by default, every
    l_i sharing the sign of sigma; keeps those whose quadratic value
    N = sum l_i^2 + sum_{i<j} l_i l_j is divisible by sigma.  Each kept
    vector realizes an all-nonzero representation of N by the 2/1 form,
    so a nonempty result forces the general scan to be inconclusive.
    The converse direction is not asserted.  both_signs=True drops the
    sign restriction.
    """
    _check(n, sigma)
    step = abs(sigma)
    mags = range(1, step)
    if both_signs:
        values = [v for m in mags for v in (m, -m)]
    else:
        sign = 1 if sigma > 0 else -1
        values = [sign * m for m in mags]
    found = []
    for combo in product(values, repeat=n):
        N = sum(li * li for li in combo)
        N += sum(combo[i] * combo[j] for i in range(n) for j in range(i + 1, n))
        if N % step == 0:
            found.append(combo)
    return found
