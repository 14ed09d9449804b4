"""Conversions between f-, g-, h- and gamma-vectors of simple polytopes.

Conventions: ``f[i]`` counts faces of codimension i, so ``f[0] == 1`` is
the polytope itself and ``f[d]`` the number of vertices.  The f-polynomial
is ``sum(f[i] * t**(d - i))``, ``h[q]`` is the coefficient of ``(1+t)**q``
in it, and g, gamma are the coefficients in the bases

    u_i(t) = sum((1+t)**q for q in range(i, d - i + 1))
    v_i(t) = (1+t)**i * (2+t)**(d - 2*i)

for i = 0..d//2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .exact import Poly, Scalar, as_exact, demote, mat_vec
from .matrices import build_g_from_gamma, build_m_g, build_m_gamma

_ONE_PLUS_T = Poly([1, 1])


def _half(d: int) -> int:
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ValueError(f"dimension must be a natural number, got {d!r}")
    return d // 2


def _check_len(seq: Sequence, expected: int, name: str) -> list:
    if len(seq) != expected:
        raise ValueError(f"{name} must have length {expected}, got {len(seq)}")
    return [as_exact(x) for x in seq]


def _out(values) -> tuple[Scalar, ...]:
    return tuple(demote(v) for v in values)


def _f_from_poly(d: int, p: Poly) -> tuple[Scalar, ...]:
    # f_i is the coefficient of t^(d-i)
    return _out(p.coeff(d - i) for i in range(d + 1))


@lru_cache(maxsize=1024)
def u_poly(d: int, i: int) -> Poly:
    n = _half(d)
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    return sum((_ONE_PLUS_T ** q for q in range(i, d - i + 1)), Poly())


@lru_cache(maxsize=1024)
def v_poly(d: int, i: int) -> Poly:
    n = _half(d)
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    return _ONE_PLUS_T ** i * Poly([2, 1]) ** (d - 2 * i)


def f_from_g(d: int, g: Sequence, route: str = "poly") -> tuple[Scalar, ...]:
    """f-vector from the g-vector, by expanding in the u-basis or via M_g."""
    g = _check_len(g, _half(d) + 1, "g")
    if route == "matrix":
        return _out(mat_vec(build_m_g(d), g))
    if route != "poly":
        raise ValueError(f"unknown route {route!r}")
    return _f_from_poly(d, sum((c * u_poly(d, k) for k, c in enumerate(g)), Poly()))


def f_from_gamma(d: int, gamma: Sequence, route: str = "poly") -> tuple[Scalar, ...]:
    gamma = _check_len(gamma, _half(d) + 1, "gamma")
    if route == "matrix":
        return _out(mat_vec(build_m_gamma(d), gamma))
    if route != "poly":
        raise ValueError(f"unknown route {route!r}")
    return _f_from_poly(d, sum((c * v_poly(d, k) for k, c in enumerate(gamma)), Poly()))


def g_from_gamma(d: int, gamma: Sequence) -> tuple[Scalar, ...]:
    gamma = _check_len(gamma, _half(d) + 1, "gamma")
    return _out(mat_vec(build_g_from_gamma(d), gamma))


def h_from_g(d: int, g: Sequence) -> tuple[Scalar, ...]:
    g = _check_len(g, _half(d) + 1, "g")
    return _out(sum(g[:min(i, d - i) + 1]) for i in range(d + 1))


def _is_palindrome(seq) -> bool:
    return list(seq) == list(seq)[::-1]


def g_from_h(d: int, h: Sequence) -> tuple[Scalar, ...]:
    h = _check_len(h, d + 1, "h")
    if not _is_palindrome(h):
        raise ValueError(f"h-vector is not palindromic: {_out(h)}")
    return _out([h[0]] + [h[k] - h[k - 1] for k in range(1, _half(d) + 1)])


def h_from_f(d: int, f: Sequence) -> tuple[Scalar, ...]:
    """Coefficients of the f-polynomial in powers of (1+t); no symmetry assumed."""
    f = _check_len(f, d + 1, "f")
    fpoly = Poly(f[d - m] for m in range(d + 1))
    shifted = fpoly(Poly([-1, 1]))  # t = s - 1
    return _out(shifted.coeff(q) for q in range(d + 1))


def f_from_h(d: int, h: Sequence) -> tuple[Scalar, ...]:
    h = _check_len(h, d + 1, "h")
    return _f_from_poly(d, sum((c * _ONE_PLUS_T ** q for q, c in enumerate(h)), Poly()))


def check_dehn_somerville(d: int, f: Sequence) -> bool:
    """True iff ``f`` is the image of some g-vector, i.e. f = M_g(d) @ g."""
    f = _check_len(f, d + 1, "f")
    h = h_from_f(d, f)
    if not _is_palindrome(h):
        return False
    g = g_from_h(d, h)
    return f_from_g(d, g, route="matrix") == _out(f)


@dataclass(frozen=True)
class FaceData:
    d: int
    f: tuple | None = None
    g: tuple | None = None
    h: tuple | None = None
    gamma: tuple | None = None

    def __post_init__(self):
        n = _half(self.d)
        for name, length in (("f", self.d + 1), ("h", self.d + 1), ("g", n + 1), ("gamma", n + 1)):
            value = getattr(self, name)
            if value is not None:
                _check_len(value, length, name)
                object.__setattr__(self, name, _out(as_exact(x) for x in value))

    @classmethod
    def from_g(cls, d: int, g: Sequence) -> "FaceData":
        return cls(d, f=f_from_g(d, g), g=tuple(g), h=h_from_g(d, g))

    @classmethod
    def from_gamma(cls, d: int, gamma: Sequence) -> "FaceData":
        g = g_from_gamma(d, gamma)
        return cls(d, f=f_from_gamma(d, gamma), g=g, h=h_from_g(d, g), gamma=tuple(gamma))


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    parameters: dict
    d: int
    g: tuple
    gamma: tuple | None
    expected_f: tuple
    note: str = field(default="", compare=False)


def catalogue(name: str, **params) -> CatalogueEntry:
    """Closed-form face data for ``simplex(d=)``, ``cube(d=)`` or ``polygon(m=)``.

    gamma is only recorded when it is non-negative (so not for the triangle).
    """
    if name == "simplex":
        d = params["d"]
        n = _half(d)
        g = (1,) + (0,) * n
        gamma = None
        f = f_from_g(d, g)
        note = "not flag for d >= 2; gamma omitted" if d > 1 else ""
        if d <= 1:
            gamma = (1,) + (0,) * n
    elif name == "cube":
        d = params["d"]
        gamma = (1,) + (0,) * _half(d)
        g = g_from_gamma(d, gamma)
        f = f_from_gamma(d, gamma)
        note = ""
    elif name == "polygon":
        m = params["m"]
        if not isinstance(m, int) or m < 3:
            raise ValueError(f"a polygon needs at least 3 vertices, got {m!r}")
        d = 2
        g = (1, m - 3)
        gamma = (1, m - 4) if m >= 4 else None
        f = f_from_g(d, g)
        note = "" if gamma else "triangle is not flag; its gamma_1 would be -1"
    else:
        raise ValueError(f"unknown catalogue entry {name!r}")
    return CatalogueEntry(name, dict(params), d, tuple(g), gamma, tuple(f), note)
