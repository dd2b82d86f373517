"""Truncated formal power series over Python's unbounded integers.

The counting code in this package reduces everything to coefficient
extraction from products of a handful of sparse series.  A series value
knows its coefficients for exponents 0..truncation and nothing beyond;
every binary operation truncates its result to the shorter operand.
Coefficients are plain ints, so arithmetic never wraps or loses width.
"""

from dataclasses import dataclass


class TruncationError(IndexError):
    """A coefficient beyond the truncation window was requested."""


@dataclass(frozen=True)
class QSeries:
    """Dense truncated power series with exact integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, value: int, truncation: int) -> "QSeries":
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        return cls((value,) + (0,) * truncation)

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> int:
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        if n > self.truncation:
            raise TruncationError(
                f"coefficient {n} lies beyond truncation {self.truncation}; "
                "recompute with a larger window"
            )
        return self.coeffs[n]

    def _coerce(self, other):
        if isinstance(other, int):
            return QSeries.constant(other, self.truncation)
        if isinstance(other, QSeries):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # zip stops at the shorter operand: result truncation = min of the two
        return QSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QSeries(tuple(b - a for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.truncation, other.truncation)
        a = [(i, c) for i, c in enumerate(self.coeffs[: t + 1]) if c]
        b = [(j, c) for j, c in enumerate(other.coeffs[: t + 1]) if c]
        if len(a) > len(b):
            a, b = b, a
        out = [0] * (t + 1)
        for i, ci in a:
            lim = t - i
            for j, cj in b:
                if j > lim:
                    break
                out[i + j] += ci * cj
        return QSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QSeries":
        """Repeated squaring; exponent 0 gives the constant series 1."""
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = QSeries.constant(1, self.truncation)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"QSeries([{head}{tail}], truncation={self.truncation})"
