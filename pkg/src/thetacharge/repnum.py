"""Exact representation numbers: sums of squares and even positive-definite forms.

Two independent routes run through this module.  Counts of square
decompositions come from coefficient extraction in powers of the
one-dimensional theta series, and again from exhaustive tuple
enumeration; counts for a general even form come from a provably
complete lattice walk, and again from an unpruned box scan.  The paired
routes exist so that every closed identity can be checked against an
oracle that shares none of its code.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, isqrt

from .qseries import QSeries


class NotPositiveDefiniteError(ValueError):
    """The symmetric matrix fails positive definiteness."""


class CountInconsistencyError(ArithmeticError):
    """An alternating-count identity produced a negative value."""


class ConvergenceError(RuntimeError):
    """Lattice-sum truncation cannot meet the requested accuracy."""


# counting kinds and the count they must report at N = 0
_KINDS = {
    "squares": 1,
    "nonvanishing-squares": 0,
    "form": 1,
    "nonvanishing-form": 0,
}


@dataclass(frozen=True)
class RepTable:
    """Representation counts indexed by N = 0..nmax for one counting kind."""

    kind: str
    nmax: int
    counts: tuple[int, ...]
    k: "int | None" = None
    form: "QuadForm | None" = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown counting kind {self.kind!r}")
        counts = tuple(self.counts)
        if len(counts) != self.nmax + 1:
            raise ValueError("counts must cover N = 0..nmax")
        if counts[0] != _KINDS[self.kind]:
            raise ValueError(f"count at N=0 must be {_KINDS[self.kind]} for kind {self.kind!r}")
        if any(c < 0 for c in counts):
            raise ValueError("counts must be nonnegative")
        object.__setattr__(self, "counts", counts)

    def __len__(self) -> int:
        return self.nmax + 1

    def __getitem__(self, N: int) -> int:
        if not 0 <= N <= self.nmax:
            raise IndexError(f"N={N} outside table range 0..{self.nmax}")
        return self.counts[N]


# ---------------------------------------------------------------------------
# sums of squares

def theta3_series(tmax: int) -> QSeries:
    """Theta series of the integer line: 1 + 2q + 2q^4 + 2q^9 + ...

    Coefficient m counts the integers whose square equals m.
    """
    if tmax < 0:
        raise ValueError("truncation must be nonnegative")
    coeffs = [0] * (tmax + 1)
    coeffs[0] = 1
    j = 1
    while j * j <= tmax:
        coeffs[j * j] = 2
        j += 1
    return QSeries(tuple(coeffs))


def squares_table(k: int, nmax: int) -> RepTable:
    """Counts of ordered k-tuples of integers whose squares sum to each N <= nmax."""
    _check_k(k)
    counts = (theta3_series(nmax) ** k).coeffs
    return RepTable("squares", nmax, counts, k=k)


def nonzero_squares_table(k: int, nmax: int) -> RepTable:
    """Like squares_table, restricted to tuples with every coordinate nonzero.

    Generating function: the k-th power of (theta series minus 1).
    """
    _check_k(k)
    counts = ((theta3_series(nmax) - 1) ** k).coeffs
    return RepTable("nonvanishing-squares", nmax, counts, k=k)


def squares_tables(kmax: int, nmax: int) -> list[RepTable]:
    """Plain-count tables for every k = 1..kmax, as nonzero_squares_binomial wants them."""
    return [squares_table(k, nmax) for k in range(1, kmax + 1)]


def nonzero_squares_binomial(k: int, N: int, rtables) -> int:
    """Nonvanishing count from the plain counts.

    Inclusion-exclusion over which coordinates vanish collapses to
    sum over i = 1..k of (-1)^(k-i) C(k,i) times the plain i-count of N.
    """
    _check_k(k)
    if N < 1:
        raise ValueError("N must be positive")
    if len(rtables) < k:
        raise ValueError("need plain-count tables for every i = 1..k")
    total = 0
    for i in range(1, k + 1):
        total += (-1) ** (k - i) * comb(k, i) * rtables[i - 1][N]
    if total < 0:
        raise CountInconsistencyError(f"negative nonvanishing count {total} at k={k}, N={N}")
    return total


def _check_k(k: int):
    if k < 1:
        raise ValueError("k must be at least 1")


def _divisors(N: int) -> list[int]:
    if N < 1:
        raise ValueError("N must be positive")
    small, large = [], []
    d = 1
    while d * d <= N:
        if N % d == 0:
            small.append(d)
            if d * d != N:
                large.append(N // d)
        d += 1
    return small + large


def two_squares_divisor(N: int) -> int:
    """Two-square count by Jacobi's divisor formula: 4(d_1(N) - d_3(N))."""
    balance = 0
    for d in _divisors(N):
        r = d % 4
        if r == 1:
            balance += 1
        elif r == 3:
            balance -= 1
    return 4 * balance


def four_squares_divisor(N: int) -> int:
    """Four-square count: 8 times the sum of divisors of N not divisible by 4."""
    return 8 * sum(d for d in _divisors(N) if d % 4 != 0)


def three_squares_possible(N: int) -> bool:
    """Legendre's criterion: N is a sum of three squares iff N != 4^a (8b+7)."""
    if N < 1:
        raise ValueError("N must be positive")
    while N % 4 == 0:
        N //= 4
    return N % 8 != 7


def brute_squares(k: int, N: int, require_nonzero: bool = False) -> int:
    """Exhaustive tuple count, the oracle side of the convolution identities.

    Enumerates magnitudes coordinate by coordinate, each bounded by the
    integer square root of what remains; signs contribute a factor 2 per
    nonzero coordinate.  Shares no code with the series route.
    """
    _check_k(k)
    if N < 0:
        raise ValueError("N must be nonnegative")
    lo = 1 if require_nonzero else 0

    def rec(coords: int, rem: int) -> int:
        if coords == 0:
            return 1 if rem == 0 else 0
        total = 0
        m = lo
        while m * m <= rem:
            total += (2 if m else 1) * rec(coords - 1, rem - m * m)
            m += 1
        return total

    return rec(k, N)


def brute_squares_table(k: int, nmax: int, require_nonzero: bool = False) -> RepTable:
    """One pass of the exhaustive enumeration, binned by the square sum."""
    _check_k(k)
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    counts = [0] * (nmax + 1)
    lo = 1 if require_nonzero else 0

    def rec(coords: int, acc: int, weight: int):
        m = lo
        if coords == 1:
            while (s := acc + m * m) <= nmax:
                counts[s] += weight * (2 if m else 1)
                m += 1
            return
        while acc + m * m <= nmax:
            rec(coords - 1, acc + m * m, weight * (2 if m else 1))
            m += 1

    rec(k, 0, 1)
    kind = "nonvanishing-squares" if require_nonzero else "squares"
    return RepTable(kind, nmax, tuple(counts), k=k)


# ---------------------------------------------------------------------------
# even positive-definite quadratic forms

def _det_bareiss(rows) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for j in range(i + 1, n):
                if m[j][i] != 0:
                    m[i], m[j] = m[j], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, n):
            for l in range(i + 1, n):
                # Bareiss: this division is exact
                m[j][l] = (m[j][l] * m[i][i] - m[j][i] * m[i][l]) // prev
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class QuadForm:
    """Even symmetric positive-definite integer Gram matrix A; Q(x) = x^T A x."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        n = len(rows)
        if n == 0:
            raise ValueError("the matrix must be nonempty")
        for r in rows:
            if len(r) != n:
                raise ValueError("the matrix must be square")
            for e in r:
                if not isinstance(e, int):
                    raise TypeError("matrix entries must be integers")
        for p in range(n):
            if rows[p][p] % 2 != 0:
                raise ValueError(f"diagonal entry at {p} is odd; the form must be even")
            for q in range(p + 1, n):
                if rows[p][q] != rows[q][p]:
                    raise ValueError("the matrix must be symmetric")
        for m in range(1, n + 1):
            d = _det_bareiss([r[:m] for r in rows[:m]])
            if d <= 0:
                raise NotPositiveDefiniteError(f"leading {m}x{m} minor is {d}")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def value(self, x) -> int:
        """Q(x) = sum of A_pq x_p x_q; always an even integer."""
        x = tuple(x)
        if len(x) != self.n:
            raise ValueError("vector length does not match the form")
        total = 0
        for p, row in enumerate(self.entries):
            xp = x[p]
            if xp:
                total += sum(a * xq for a, xq in zip(row, x)) * xp
        return total

    def deleted(self, indices) -> "QuadForm":
        """Principal submatrix with the given variable indices removed."""
        drop = set(indices)
        keep = [p for p in range(self.n) if p not in drop]
        if not keep:
            raise ValueError("cannot delete every variable")
        rows = tuple(tuple(self.entries[p][q] for q in keep) for p in keep)
        return QuadForm(rows)

    def determinant(self) -> int:
        return _det_bareiss(self.entries)

    def leading_minors(self) -> tuple[int, ...]:
        return tuple(
            _det_bareiss([r[:m] for r in self.entries[:m]]) for m in range(1, self.n + 1)
        )

    def inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact inverse matrix, for the transformation-law evaluation."""
        n = self.n
        a = [[Fraction(self.entries[p][q]) for q in range(n)] for p in range(n)]
        inv = [[Fraction(int(p == q)) for q in range(n)] for p in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if a[r][col] != 0)
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            scale = a[col][col]
            a[col] = [e / scale for e in a[col]]
            inv[col] = [e / scale for e in inv[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [e - f * g for e, g in zip(a[r], a[col])]
                    inv[r] = [e - f * g for e, g in zip(inv[r], inv[col])]
        return tuple(tuple(row) for row in inv)


def an_form(n: int) -> QuadForm:
    """Gram matrix with 2 on the diagonal and 1 elsewhere; determinant n + 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    q = QuadForm(tuple(tuple(2 if p == r else 1 for r in range(n)) for p in range(n)))
    assert q.determinant() == n + 1
    return q


def parse_form_text(text: str) -> QuadForm:
    """Parse the form text format: first line n, then n rows of n integers."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty form description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the dimension, got {lines[0]!r}") from None
    if n < 1:
        raise ValueError("dimension must be positive")
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n:
            raise ValueError(f"expected {n} entries per row, got {len(parts)}")
        try:
            rows.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"non-integer matrix entry in row {ln!r}") from None
    return QuadForm(tuple(rows))


# ---------------------------------------------------------------------------
# complete lattice enumeration below an ellipsoid

def _cholesky(gram):
    """Rational decomposition Q(x) = sum_i c_i (x_i + sum_{j>i} u_ij x_j)^2.

    Exact in Fractions; c_i all positive exactly when the matrix is
    positive definite.
    """
    n = len(gram)
    a = [[Fraction(gram[p][q]) for q in range(n)] for p in range(n)]
    c = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        ci = a[i][i]
        if ci <= 0:
            raise NotPositiveDefiniteError("form is not positive definite")
        c[i] = ci
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / ci
        for p in range(i + 1, n):
            for q in range(p, n):
                a[p][q] -= ci * u[i][p] * u[i][q]
    return c, u


def _int_interval(s: Fraction, R: Fraction) -> range:
    """All integers x with (x + s)^2 <= R.

    A float seed locates the ends, then exact rational comparisons expand
    and shrink them, so the interval is provably complete whatever the
    rounding of the seed.
    """
    fs = float(s)
    r = math.sqrt(float(R)) if R > 0 else 0.0
    lo = math.floor(-fs - r)
    hi = math.ceil(-fs + r)
    while (lo - 1 + s) ** 2 <= R:
        lo -= 1
    while (hi + 1 + s) ** 2 <= R:
        hi += 1
    while lo <= hi and (lo + s) ** 2 > R:
        lo += 1
    while lo <= hi and (hi + s) ** 2 > R:
        hi -= 1
    return range(lo, hi + 1)


def _form_values(gram, budget) -> list:
    """Q(x) for every integer vector with Q(x) <= budget (x = 0 included).

    Coordinates are fixed from the last index down; offsets[i] carries the
    inner shift sum_{j fixed} u_ij x_j for each still-open index i.
    """
    c, u = _cholesky(gram)
    n = len(c)
    out = []

    def descend(level, used, offsets):
        s = offsets[level]
        R = (budget - used) / c[level]
        for x in _int_interval(s, R):
            step = c[level] * (x + s) ** 2
            if level == 0:
                out.append(used + step)
            else:
                new_offsets = offsets[:level]
                for p in range(level):
                    new_offsets[p] += u[p][level] * x
                descend(level - 1, used + step, new_offsets)

    if budget >= 0:
        descend(n - 1, Fraction(0), [Fraction(0)] * n)
    return out


@lru_cache(maxsize=None)
def theta_form_series(Q: QuadForm, nmax: int) -> QSeries:
    """Theta series of an even form: coefficient N counts solutions of Q(x) = 2N."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    counts = [0] * (nmax + 1)
    for v in _form_values(Q.entries, 2 * nmax):
        counts[int(v) // 2] += 1  # values of an even form are even integers
    return QSeries(tuple(counts))


def form_table(Q: QuadForm, nmax: int) -> RepTable:
    """Plain form counts as a RepTable."""
    return RepTable("form", nmax, theta_form_series(Q, nmax).coeffs, form=Q)


def nonzero_form_count(Q: QuadForm, N: int) -> int:
    """All-nonzero solution count of Q(x) = 2N by alternating variable deletion.

    Sum over proper subsets S of the variable set of (-1)^|S| times the
    plain count for the form with the S variables removed.
    """
    if N < 1:
        raise ValueError("N must be positive")
    n = Q.n
    # shared window size so the cached tables are reused across nearby N
    window = 1 << (N - 1).bit_length()
    total = 0
    for size in range(n):
        sign = -1 if size % 2 else 1
        for subset in combinations(range(n), size):
            sub = Q.deleted(subset) if subset else Q
            total += sign * theta_form_series(sub, window).coeffs[N]
    if total < 0:
        raise CountInconsistencyError(f"negative nonvanishing form count {total} at N={N}")
    return total


def nonzero_form_table(Q: QuadForm, nmax: int) -> RepTable:
    """Nonvanishing form counts for N = 0..nmax."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    counts = [0] + [nonzero_form_count(Q, N) for N in range(1, nmax + 1)]
    return RepTable("nonvanishing-form", nmax, tuple(counts), form=Q)


def brute_form_count(Q: QuadForm, N: int, require_nonzero: bool = False) -> int:
    """Box-scan oracle for form counts, independent of the lattice walk.

    Scans the full box |x_p| <= sqrt(2N (A^{-1})_pp) with no pruning and
    counts exact solutions of Q(x) = 2N, optionally with every
    coordinate nonzero.  The bound is the standard inverse-diagonal one
    for positive-definite forms, taken with exact integer square roots.
    """
    if N < 1:
        raise ValueError("N must be positive")
    A = Q.entries
    n = Q.n
    target = 2 * N
    D = Q.determinant()
    bounds = []
    for p in range(n):
        minor = Q.deleted((p,)).determinant() if n > 1 else 1
        # floor of sqrt(2N * minor / D), exactly
        bounds.append(isqrt(target * minor * D) // D)
    count = 0

    def rec(p, partial, dots):
        nonlocal count
        b = bounds[p]
        app = A[p][p]
        dp = dots[p]
        if p == n - 1:
            for x in range(-b, b + 1):
                if x == 0 and require_nonzero:
                    continue
                if partial + app * x * x + 2 * x * dp == target:
                    count += 1
            return
        for x in range(-b, b + 1):
            if x == 0 and require_nonzero:
                continue
            rec(p + 1, partial + app * x * x + 2 * x * dp,
                [d + A[q][p] * x for q, d in enumerate(dots)])

    rec(0, 0, [0] * n)
    return count


# ---------------------------------------------------------------------------
# numeric check of the theta inversion law

@dataclass(frozen=True)
class ThetaCheck:
    lhs: complex
    rhs: complex
    absdiff: float


def _theta_sum(gram, z: complex, cutoff: float) -> complex:
    """Numeric theta sum over the lattice, truncated with a certified tail bound.

    Terms are exp(i pi z Q(x)); the walk keeps Q(x) <= budget, where the
    budget starts at the point where term size falls below cutoff and
    grows until the bound on the dropped mass is itself below cutoff.
    """
    y = z.imag
    if y <= 0:
        raise ValueError("the theta sum needs Im z > 0")
    if not 0 < cutoff < 1:
        raise ValueError("cutoff must lie in (0, 1)")
    c, _ = _cholesky(gram)
    cf = [float(ci) for ci in c]
    decay = math.exp(-math.pi * y)

    def count_bound(t):
        # every vector with Q(x) <= t sits in a box of this many points
        return math.prod(2.0 * math.sqrt(t / ci) + 1.0 for ci in cf)

    def tail_bound(budget):
        # dropped mass <= sum_j count(budget+j+1) * e^{-pi y (budget+j)}
        total = 0.0
        term = math.exp(-math.pi * y * budget)
        for j in range(100000):
            piece = count_bound(budget + j + 1) * term
            total += piece
            term *= decay
            if piece < 1e-22:
                # geometric remainder with slack for the polynomial growth
                return total + piece * decay / (1.0 - decay) * 64.0
        raise ConvergenceError("tail bound did not converge")

    budget = max(1, math.ceil(math.log(1.0 / cutoff) / (math.pi * y)))
    while tail_bound(budget) > cutoff:
        budget += 1
        if budget > 200000:
            raise ConvergenceError(
                f"cannot certify cutoff {cutoff} at Im z = {y}; truncation would be enormous"
            )
    coef = 1j * math.pi * z
    return sum(cmath.exp(coef * float(v)) for v in _form_values(gram, budget))


def theta_form_value(Q: QuadForm, z: complex, cutoff: float = 1e-12) -> complex:
    """Numeric value of the theta sum of Q at z (Im z > 0)."""
    return _theta_sum(Q.entries, complex(z), cutoff)


def theta_transform_check(Q: QuadForm, z: complex, cutoff: float = 1e-12) -> ThetaCheck:
    """Numerically compare the theta sum of Q at -1/z against its inversion law.

    The right side is (z/i)^(n/2) det(A)^(-1/2) times the theta sum of
    the inverse form at z, with the principal square root.  This is the
    one floating-point path in the package; everything it feeds on
    (lattice walk bounds, the inverse matrix) is exact.
    """
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("z must lie in the upper half plane")
    lhs = _theta_sum(Q.entries, -1 / z, cutoff)
    root = cmath.sqrt(z / 1j) ** Q.n
    rhs = root * Q.determinant() ** -0.5 * _theta_sum(Q.inverse(), z, cutoff)
    return ThetaCheck(lhs, rhs, abs(lhs - rhs))
