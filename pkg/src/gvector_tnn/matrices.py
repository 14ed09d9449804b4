"""Finite windows of the face-number matrices and their factor matrices.

For a d-dimensional simple polytope with n = d // 2:

* ``build_m_g(d)`` maps the g-vector to the f-vector,
* ``build_m_gamma(d)`` maps the gamma-vector to the f-vector,
* ``build_a`` and ``build_g_factor`` give the two totally non-negative
  factors with ``M_g = build_a(eps, d+1, n+1) @ build_g_factor(eps, n)``,
  eps the parity of d and the G factor read with both indices reversed;
  ``build_cap_gamma_factor`` plays the same role for ``M_gamma``.

Rows are indexed by codimension i = 0..d and columns by k = 0..n.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import ExactMatrix, binom, mat_mul, require_int


class Parity(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @classmethod
    def of(cls, d: int) -> "Parity":
        """(-1)**d as a sign: PLUS for even dimension."""
        return cls.PLUS if d % 2 == 0 else cls.MINUS


@dataclass(frozen=True)
class DimensionContext:
    d: int
    n: int
    eps: Parity

    @classmethod
    def of(cls, d: int) -> "DimensionContext":
        _check_natural(d, "d")
        return cls(d, d // 2, Parity.of(d))


def _check_natural(x: int, name: str) -> None:
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise ValueError(f"{name} must be a natural number, got {x!r}")


def m_g_entry(d: int, i: int, k: int) -> int:
    return binom(d - k + 1, d - i + 1) - binom(k, d - i + 1)


def m_gamma_entry(d: int, i: int, k: int) -> int:
    return sum(binom(k, i - k - j) * binom(d - 2 * k, j) * 2 ** j
               for j in range(d - 2 * k + 1))


def a_entry(eps: Parity, i: int, j: int) -> int:
    tail = binom(j, i - j - 1)
    return binom(j + 1, i - j) + (tail if eps is Parity.MINUS else -tail)


def g_entry(eps: Parity, j: int, k: int) -> int:
    if eps is Parity.MINUS:
        return binom(k + j + 1, 2 * j + 1)
    value = Fraction(2 * k + 1, 2 * j + 1) * binom(k + j, 2 * j)
    return require_int(value, f"G+({j},{k})")


def cap_gamma_entry(j: int, k: int) -> int:
    # binom vanishes for k < j, so the negative power of 4 never survives
    return 4 ** (k - j) * binom(k, j) if k >= j else 0


@lru_cache(maxsize=256)
def build_m_g(d: int) -> ExactMatrix:
    ctx = DimensionContext.of(d)
    return ExactMatrix.from_function(d + 1, ctx.n + 1, lambda i, k: m_g_entry(d, i, k))


@lru_cache(maxsize=256)
def build_m_gamma(d: int) -> ExactMatrix:
    ctx = DimensionContext.of(d)
    return ExactMatrix.from_function(d + 1, ctx.n + 1, lambda i, k: m_gamma_entry(d, i, k))


@lru_cache(maxsize=256)
def build_a(eps: Parity, rows: int, cols: int) -> ExactMatrix:
    """Top-left rows x cols window of A_eps."""
    if rows < 1 or cols < 1:
        raise ValueError("window must have at least one row and one column")
    return ExactMatrix.from_function(rows, cols, lambda i, j: a_entry(eps, i, j))


@lru_cache(maxsize=256)
def build_g_factor(eps: Parity, n: int) -> ExactMatrix:
    """(n+1) x (n+1) matrix with entry (j, k) = G_eps(n-j, n-k)."""
    _check_natural(n, "n")
    return ExactMatrix.from_function(n + 1, n + 1, lambda j, k: g_entry(eps, n - j, n - k))


@lru_cache(maxsize=256)
def build_cap_gamma_factor(n: int) -> ExactMatrix:
    """(n+1) x (n+1) matrix with entry (j, k) = 4**(k'-j') C(k', j'), j' = n-j, k' = n-k."""
    _check_natural(n, "n")
    return ExactMatrix.from_function(n + 1, n + 1, lambda j, k: cap_gamma_entry(n - j, n - k))


@lru_cache(maxsize=256)
def build_g_from_gamma(d: int) -> ExactMatrix:
    """Lower unitriangular T with g = T @ gamma.

    T(i, j) = C(d-2j, i-j) - C(d-2j, i-j-1).  The upper index is d - 2j:
    with n - 2j the 3-cube (gamma = (1, 0)) would not come out as g = (1, 2).
    """
    ctx = DimensionContext.of(d)
    return ExactMatrix.from_function(
        ctx.n + 1, ctx.n + 1,
        lambda i, j: binom(d - 2 * j, i - j) - binom(d - 2 * j, i - j - 1) if j <= i else 0)


def reverse_both(x: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(x.rows, x.cols, x.entries[::-1])


@dataclass(frozen=True)
class EqualityCheck:
    name: str
    holds: bool
    # (row, col, lhs, rhs) of the first differing entry
    first_difference: tuple | None = None


@dataclass(frozen=True)
class FactorizationReport:
    d: int
    checks: tuple[EqualityCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks)


def _compare(name: str, lhs: ExactMatrix, rhs: ExactMatrix) -> EqualityCheck:
    diff = lhs.first_difference(rhs)
    return EqualityCheck(name, diff is None, diff)


def verify_factorization(d: int) -> FactorizationReport:
    """Check the three exact factorizations for dimension ``d``.

    * ``m_g``: M_g(d) = A_eps @ G_eps factor
    * ``m_gamma``: M_gamma(d) = A_eps @ Gamma factor
    * ``g_from_gamma``: M_gamma(d) = M_g(d) @ T(d)

    A failure is reported in the result, not raised.
    """
    ctx = DimensionContext.of(d)
    a = build_a(ctx.eps, d + 1, ctx.n + 1)
    m_g = build_m_g(d)
    m_gamma = build_m_gamma(d)
    return FactorizationReport(d, (
        _compare("m_g", m_g, mat_mul(a, build_g_factor(ctx.eps, ctx.n))),
        _compare("m_gamma", m_gamma, mat_mul(a, build_cap_gamma_factor(ctx.n))),
        _compare("g_from_gamma", m_gamma, mat_mul(m_g, build_g_from_gamma(d))),
    ))
