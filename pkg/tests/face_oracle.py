"""Brute-force face enumeration for small H-described polytopes.

Independent of the library: faces are the distinct non-empty vertex sets
obtained by intersecting subsets of facets, and each face's dimension is the
affine rank of its vertices.  Only intended for tiny polytopes.
"""
from fractions import Fraction
from itertools import combinations, product


def _rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                q = rows[r][c] / rows[rank][c]
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _affine_dim(points):
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return _rank(diffs) if diffs else 0


def face_vector(vertices, facets, d):
    """Return (f_0, ..., f_d) with f_i = number of codimension-i faces.

    ``facets`` is a list of (normal, offset) with the polytope on the side
    normal . x <= offset; each vertex set is found by exact evaluation.
    """
    on = [frozenset(v for v in vertices
                    if sum(a * b for a, b in zip(n, v)) == off)
          for n, off in facets]
    faces = {frozenset(vertices)}
    for r in range(1, len(facets) + 1):
        for subset in combinations(range(len(facets)), r):
            common = frozenset(vertices)
            for s in subset:
                common &= on[s]
            if common:
                faces.add(common)
    f = [0] * (d + 1)
    for face in faces:
        f[d - _affine_dim(sorted(face))] += 1
    return tuple(f)


def cube(d):
    vertices = list(product((0, 1), repeat=d))
    facets = []
    for axis in range(d):
        e = [0] * d
        e[axis] = 1
        facets.append((tuple(e), 1))
        facets.append((tuple(-x for x in e), 0))
    return vertices, facets


def simplex(d):
    vertices = [tuple(0 for _ in range(d))]
    for axis in range(d):
        e = [0] * d
        e[axis] = 1
        vertices.append(tuple(e))
    facets = [(tuple(-1 if a == axis else 0 for a in range(d)), 0)
              for axis in range(d)]
    facets.append((tuple(1 for _ in range(d)), 1))
    return vertices, facets


def convex_polygon(points):
    """Facets of a convex polygon given counter-clockwise integer vertices."""
    facets = []
    m = len(points)
    for k in range(m):
        (x0, y0), (x1, y1) = points[k], points[(k + 1) % m]
        normal = (y1 - y0, x0 - x1)
        facets.append((normal, normal[0] * x0 + normal[1] * y0))
    return list(points), facets
