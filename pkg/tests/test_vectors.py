import random

import pytest
from hypothesis import given, settings, strategies as st

from face_oracle import cube, face_vector, simplex
from gvector_tnn.exact import Poly
from gvector_tnn.vectors import (FaceData, catalogue, check_dehn_somerville, f_from_g,
                                 f_from_gamma, f_from_h, g_from_gamma, g_from_h, h_from_f,
                                 h_from_g, u_poly, v_poly)


def test_u_poly_examples():
    assert u_poly(3, 0) == Poly([4, 6, 4, 1])
    assert u_poly(3, 1) == Poly([2, 3, 1])
    assert u_poly(2, 1) == Poly([1, 1])
    with pytest.raises(ValueError):
        u_poly(3, 2)


def test_v_poly_examples():
    assert v_poly(3, 0) == Poly([8, 12, 6, 1])
    assert v_poly(2, 1) == Poly([1, 1])
    assert v_poly(3, 1) == Poly([2, 3, 1])
    with pytest.raises(ValueError):
        v_poly(2, 2)


def test_basis_degrees():
    for d in range(12):
        for i in range(d // 2 + 1):
            assert u_poly(d, i).degree == d - i
            assert v_poly(d, i).degree == d - i


@pytest.mark.parametrize("route", ["poly", "matrix"])
def test_f_from_g_examples(route):
    assert f_from_g(3, (1, 0), route) == face_vector(*simplex(3), 3)
    assert f_from_g(3, (1, 2), route) == face_vector(*cube(3), 3)
    assert f_from_g(2, (1, 2), route) == (1, 5, 5)


@pytest.mark.parametrize("route", ["poly", "matrix"])
def test_f_from_gamma_examples(route):
    assert f_from_gamma(3, (1, 0), route) == (1, 6, 12, 8)
    assert f_from_gamma(2, (1, 1), route) == (1, 5, 5)
    assert f_from_gamma(2, (1, 0), route) == face_vector(*cube(2), 2)


def test_wrong_lengths_rejected():
    with pytest.raises(ValueError):
        f_from_g(3, (1,))
    with pytest.raises(ValueError):
        f_from_gamma(3, (1, 0, 0))
    with pytest.raises(ValueError):
        g_from_gamma(4, (1, 0))
    with pytest.raises(ValueError):
        h_from_g(2, (1,))
    with pytest.raises(ValueError):
        check_dehn_somerville(3, (1, 6, 12))
    with pytest.raises(ValueError):
        f_from_g(2, (1, 1), route="sideways")


def test_g_from_gamma_examples():
    assert g_from_gamma(3, (1, 0)) == (1, 2)
    assert g_from_gamma(2, (1, 1)) == (1, 2)
    for d in range(10):
        gamma = (1,) + (0,) * (d // 2)
        assert f_from_g(d, g_from_gamma(d, gamma)) == f_from_gamma(d, gamma)
    assert g_from_gamma(4, (1, 0, 0)) == (1, 3, 2)  # 4-cube: h = (1, 4, 6, 4, 1)


def test_h_from_g_examples():
    assert h_from_g(3, (1, 2)) == (1, 3, 3, 1)
    assert h_from_g(3, (1, 0)) == (1, 1, 1, 1)
    assert h_from_g(2, (1, 2)) == (1, 3, 1)


def test_g_from_h_examples():
    assert g_from_h(3, (1, 3, 3, 1)) == (1, 2)
    for d in range(8):
        assert g_from_h(d, (1,) * (d + 1)) == (1,) + (0,) * (d // 2)
    assert g_from_h(2, (1, 3, 1)) == (1, 2)
    with pytest.raises(ValueError):
        g_from_h(3, (1, 3, 2, 1))


def test_h_from_f_matches_h_from_g():
    for d in range(10):
        g = tuple(range(1, d // 2 + 2))
        assert h_from_f(d, f_from_g(d, g)) == h_from_g(d, g)
        assert f_from_h(d, h_from_g(d, g)) == f_from_g(d, g)


def test_check_dehn_somerville_examples():
    assert check_dehn_somerville(3, (1, 6, 12, 8))
    assert not check_dehn_somerville(3, (1, 6, 12, 9))
    assert check_dehn_somerville(0, (1,))


def test_negative_entries_accepted():
    assert f_from_gamma(2, (1, -1)) == (1, 3, 3)  # triangle
    assert g_from_gamma(2, (1, -1)) == (1, 0)


sizes = st.integers(0, 12)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_routes_and_triangle_commute(data):
    d = data.draw(sizes)
    gamma = data.draw(st.lists(st.integers(-50, 50), min_size=d // 2 + 1, max_size=d // 2 + 1))
    g = g_from_gamma(d, gamma)
    assert f_from_gamma(d, gamma) == f_from_gamma(d, gamma, "matrix") == f_from_g(d, g) \
        == f_from_g(d, g, "matrix")
    h = h_from_g(d, g)
    assert h == h[::-1]
    assert g_from_h(d, h) == g
    f = f_from_g(d, g)
    assert check_dehn_somerville(d, f)
    if d >= 1:
        assert not check_dehn_somerville(d, f[:-1] + (f[-1] + 1,))


def test_face_data():
    fd = FaceData.from_gamma(3, (1, 0))
    assert (fd.f, fd.g, fd.h, fd.gamma) == ((1, 6, 12, 8), (1, 2), (1, 3, 3, 1), (1, 0))
    assert FaceData.from_g(2, (1, 2)).f == (1, 5, 5)
    with pytest.raises(ValueError):
        FaceData(3, f=(1, 2))


@pytest.mark.parametrize("name, params, f", [
    ("cube", {"d": 3}, (1, 6, 12, 8)),
    ("polygon", {"m": 5}, (1, 5, 5)),
    ("simplex", {"d": 4}, (1, 5, 10, 10, 5)),
])
def test_catalogue_examples(name, params, f):
    entry = catalogue(name, **params)
    assert entry.expected_f == f
    assert f_from_g(entry.d, entry.g) == f


def test_catalogue_details():
    cube3 = catalogue("cube", d=3)
    assert (cube3.g, cube3.gamma) == ((1, 2), (1, 0))
    pent = catalogue("polygon", m=5)
    assert (pent.g, pent.gamma) == ((1, 2), (1, 1))
    tri = catalogue("polygon", m=3)
    assert tri.gamma is None and tri.expected_f == (1, 3, 3)
    with pytest.raises(ValueError):
        catalogue("polygon", m=2)
    with pytest.raises(ValueError):
        catalogue("torus", d=2)


def test_catalogue_matches_brute_force_cubes_and_simplices():
    for d in range(1, 5):
        assert catalogue("cube", d=d).expected_f == face_vector(*cube(d), d)
        assert catalogue("simplex", d=d).expected_f == face_vector(*simplex(d), d)
