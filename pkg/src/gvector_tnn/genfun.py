"""Exact checks of the binomial identities behind the factorization.

For n >= 0, 0 <= k <= n and 0 <= i <= 2n+1 the two identities are

    C(2n-k+1, 2n-i+1) - C(k, 2n-i+1)
        = sum_{j=k..n} C(j, i-j) (2n-2k+1)/(2n-2j+1) C(2n-k-j, 2n-2j)          (even d = 2n)

    C(2n-k+2, 2n-i+2) - C(k, 2n-i+2)
        = sum_{j=k..n} (i+1)/(j+1) C(j+1, i-j) C(2n-k-j+1, 2n-2j+1)           (odd d = 2n+1)

i.e. the entries of M_g(d) written out through the A and G factors.  Summing
the first one against s**i turns both sides into (s(s+1))**k * G_{n-k}(s),
where G_a(s) = F_a(s(s+1)) = (s+1)**(2a+1) - s**(2a+1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactMatrix, Poly, binom, require_int

S = Poly.x()
_SS1 = Poly([0, 1, 1])  # s(s+1)


@dataclass(frozen=True)
class IdentityReport:
    n: int
    failures: tuple[tuple, ...]  # (i, k, lhs, rhs), sorted by (k, i)

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"n": self.n, "holds": self.holds,
                "failures": [{"i": i, "k": k, "lhs": str(l), "rhs": str(r)}
                             for i, k, l, r in self.failures]}


def identity1_sides(n: int, i: int, k: int) -> tuple[int, Fraction]:
    lhs = binom(2 * n - k + 1, 2 * n - i + 1) - binom(k, 2 * n - i + 1)
    rhs = sum((binom(j, i - j) * Fraction(2 * n - 2 * k + 1, 2 * n - 2 * j + 1)
               * binom(2 * n - k - j, 2 * n - 2 * j) for j in range(k, n + 1)), Fraction(0))
    return lhs, rhs


def identity2_sides(n: int, i: int, k: int) -> tuple[int, Fraction]:
    lhs = binom(2 * n - k + 2, 2 * n - i + 2) - binom(k, 2 * n - i + 2)
    rhs = sum((Fraction(i + 1, j + 1) * binom(j + 1, i - j)
               * binom(2 * n - k - j + 1, 2 * n - 2 * j + 1) for j in range(k, n + 1)), Fraction(0))
    return lhs, rhs


def _check(sides, n: int) -> IdentityReport:
    if n < 0:
        raise ValueError("n must be natural")
    failures = []
    for k in range(n + 1):
        for i in range(2 * n + 2):
            lhs, rhs = sides(n, i, k)
            if lhs != rhs:
                failures.append((i, k, lhs, rhs))
    return IdentityReport(n, tuple(failures))


def identity1_check(n: int) -> IdentityReport:
    return _check(identity1_sides, n)


def identity2_check(n: int) -> IdentityReport:
    return _check(identity2_sides, n)


def m_g_from_identities(d: int) -> ExactMatrix:
    """M_g(d) assembled from the right-hand side of the parity-matching identity."""
    n = d // 2
    sides = identity1_sides if d % 2 == 0 else identity2_sides
    return ExactMatrix.from_function(d + 1, n + 1, lambda i, k: sides(n, i, k)[1])


def f_gen(a: int) -> Poly:
    """F_a(z) = sum_j z**j (2a+1)/(2a-2j+1) C(2a-j, 2a-2j); integer coefficients."""
    if a < 0:
        raise ValueError("a must be natural")
    return Poly(require_int(Fraction(2 * a + 1, 2 * a - 2 * j + 1) * binom(2 * a - j, 2 * a - 2 * j),
                            f"coefficient {j} of F_{a}")
                for j in range(a + 1))


def g_gen(a: int) -> Poly:
    return f_gen(a)(_SS1)


def closed_form(a: int) -> Poly:
    return (S + 1) ** (2 * a + 1) - S ** (2 * a + 1)


def closed_form_check(a: int) -> bool:
    return g_gen(a) == closed_form(a)


def ode_residual_g(a: int) -> Poly:
    """s(s+1) G'' - 2a(1+2s) G' + 2a(2a+1) G for G = G_a; zero when the ODE holds."""
    g = g_gen(a)
    g1 = g.derivative()
    return _SS1 * g1.derivative() - 2 * a * Poly([1, 2]) * g1 + 2 * a * (2 * a + 1) * g


def ode_residual_f(a: int, variant: str = "corrected") -> Poly:
    """Residual of the second-order ODE for F_a in z.

    ``variant="printed"`` uses the first-order coefficient a(z - a(4z+1)),
    which does not annihilate F_1 = 1 + 3z.  ``"corrected"`` uses
    2(z - a(4z+1)), obtained by substituting z = s(s+1) into the G-equation
    (G' = (2s+1) F', G'' = (4z+1) F'' + 2 F').
    """
    z = Poly.x()
    core = z - a * (4 * z + 1)
    if variant == "printed":
        first = a * core
    elif variant == "corrected":
        first = 2 * core
    else:
        raise ValueError(f"unknown variant {variant!r}")
    f = f_gen(a)
    f1 = f.derivative()
    return z * (4 * z + 1) * f1.derivative() + first * f1 + 2 * a * (2 * a + 1) * f


def _check_nk(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def lhs_generating_poly(n: int, k: int) -> Poly:
    """sum_{i=0..2n+1} [C(2n-k+1, 2n-i+1) - C(k, 2n-i+1)] s**i."""
    _check_nk(n, k)
    return Poly(identity1_sides(n, i, k)[0] for i in range(2 * n + 2))


def rhs_generating_poly(n: int, k: int) -> Poly:
    """sum_{j=k..n} (s(s+1))**j (2n-2k+1)/(2n-2j+1) C(2n-k-j, 2n-2j)."""
    _check_nk(n, k)
    return sum((_SS1 ** j * (Fraction(2 * n - 2 * k + 1, 2 * n - 2 * j + 1)
                             * binom(2 * n - k - j, 2 * n - 2 * j)) for j in range(k, n + 1)),
               Poly())


def shifted_closed_form(n: int, k: int) -> Poly:
    """(s+1)**(2n+1) (s/(1+s))**k - s**(2n+1) ((1+s)/s)**k, as a polynomial."""
    _check_nk(n, k)
    return S ** k * (S + 1) ** (2 * n + 1 - k) - S ** (2 * n + 1 - k) * (S + 1) ** k
