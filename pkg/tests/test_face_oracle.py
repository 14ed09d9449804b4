from face_oracle import convex_polygon, cube, face_vector, simplex


def test_tetrahedron():
    assert face_vector(*simplex(3), 3) == (1, 4, 6, 4)


def test_three_cube():
    assert face_vector(*cube(3), 3) == (1, 6, 12, 8)


def test_pentagon():
    pts = [(0, 0), (2, 0), (3, 2), (1, 3), (-1, 2)]
    assert face_vector(*convex_polygon(pts), 2) == (1, 5, 5)


def test_square_and_four_simplex():
    assert face_vector(*cube(2), 2) == (1, 4, 4)
    assert face_vector(*simplex(4), 4) == (1, 5, 10, 10, 5)
