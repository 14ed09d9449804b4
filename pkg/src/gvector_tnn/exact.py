"""Exact scalars, univariate polynomials and dense matrices.

Integers are Python ints and rationals are :class:`fractions.Fraction`.
Nothing in this package touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import comb, lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class IntegralityError(ArithmeticError):
    """A value that must be an integer turned out not to be one."""


def binom(n: int, k: int) -> int:
    """n choose k, zero when k < 0 or k > n.

    >>> binom(5, 2), binom(3, -1), binom(0, 0)
    (10, 0, 1)
    """
    if n < 0:
        raise ValueError(f"binom: upper index must be natural, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def as_exact(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise TypeError(f"expected an exact rational, got {type(x).__name__}")
    return Fraction(x)


def demote(x: Scalar) -> Scalar:
    """Return ``x`` as an int when it is integral, otherwise unchanged."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def require_int(x: Scalar, what: str = "value") -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(f"{what} is not integral: {x}")
    return x.numerator


# ---------------------------------------------------------------- polynomials


class Poly:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[k]`` is the coefficient of the k-th power.  Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple and
    ``degree`` None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return Poly, (self.coeffs,)

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("negative power")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[demote(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms)

    def _lift(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        other = self._lift(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a natural number")
        result, base = Poly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, arg):
        """Evaluate at a scalar, or compose when ``arg`` is a Poly (Horner)."""
        acc = Poly() if isinstance(arg, Poly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * arg + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_compose(p: Poly, q: Poly) -> Poly:
    """p(q(x))."""
    return p(q)


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_coeff(p: Poly, k: int) -> Fraction:
    return p.coeff(k)


# -------------------------------------------------------------------- matrices


class ExactMatrix:
    """Immutable dense rows x cols matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_exact(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    def __reduce__(self):
        return ExactMatrix, (self.rows, self.cols, self.entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, (e for r in rows for e in r))

    @classmethod
    def from_function(cls, rows: int, cols: int, fn) -> "ExactMatrix":
        return cls(rows, cols, (fn(i, j) for i in range(rows) for j in range(cols)))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.shape}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[Scalar]]:
        """Nested lists with integral entries demoted to int."""
        return [[demote(e) for e in self.row(i)] for i in range(self.rows)]

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.to_lists()})"

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    def first_difference(self, other: "ExactMatrix"):
        """(i, j, mine, theirs) for the first differing entry, or None."""
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        for idx, (a, b) in enumerate(zip(self.entries, other.entries)):
            if a != b:
                return divmod(idx, self.cols) + (a, b)
        return None


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.entries[j::b.cols] for j in range(b.cols)] if b.cols else []
    out = []
    for i in range(a.rows):
        r = a.row(i)
        out.extend(sum(x * y for x, y in zip(r, col)) for col in bcols)
    return ExactMatrix(a.rows, b.cols, out)


def mat_vec(a: ExactMatrix, v: Sequence) -> tuple[Fraction, ...]:
    if a.cols != len(v):
        raise ValueError(f"vector of length {len(v)} does not fit {a.shape}")
    v = [as_exact(x) for x in v]
    return tuple(sum((x * y for x, y in zip(a.row(i), v)), Fraction(0)) for i in range(a.rows))


def bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Mutates ``rows``.  Every division is exact; a nonzero remainder means
    the elimination is broken and raises IntegralityError.
    """
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                q, r = divmod(pivot * ri[j] - rik * rk[j], prev)
                if r:
                    raise IntegralityError("non-integral Bareiss intermediate")
                ri[j] = q
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _int_rows(rows: list[list[Fraction]]) -> tuple[list[list[int]], int]:
    """Clear denominators row by row; returns (integer rows, scale factor)."""
    out = []
    scale = 1
    for r in rows:
        m = lcm(*(e.denominator for e in r)) if r else 1
        scale *= m
        out.append([e.numerator * (m // e.denominator) for e in r])
    return out, scale


def determinant(a: ExactMatrix) -> Fraction:
    if a.rows != a.cols:
        raise ValueError(f"determinant of non-square {a.shape} matrix")
    rows, scale = _int_rows([list(a.row(i)) for i in range(a.rows)])
    return Fraction(bareiss_det(rows), scale)


def _check_index_set(idx: Sequence[int], bound: int, what: str) -> tuple[int, ...]:
    idx = tuple(idx)
    if any(not 0 <= i < bound for i in idx):
        raise IndexError(f"{what} index out of range 0..{bound - 1}: {idx}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} indices must be strictly increasing: {idx}")
    return idx


def minor(a: ExactMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> Fraction:
    """Determinant of the square submatrix on the given rows and columns."""
    row_idx = _check_index_set(row_idx, a.rows, "row")
    col_idx = _check_index_set(col_idx, a.cols, "column")
    if len(row_idx) != len(col_idx) or not row_idx:
        raise ValueError("minor needs equal, non-empty row and column index sets")
    sub = [[a[i, j] for j in col_idx] for i in row_idx]
    rows, scale = _int_rows(sub)
    return Fraction(bareiss_det(rows), scale)
