"""Splitting the g-to-f matrix into two totally non-negative factors.

Run with ``python demos/01_factorization.py``.
"""
from gvector_tnn import (DimensionContext, build_a, build_g_factor, build_m_g,
                         verify_factorization)

# The g-vector of a simple d-polytope determines its face numbers linearly.
# For d = 5 the matrix has d + 1 rows (codimension 0..5) and 3 columns.
d = 5
ctx = DimensionContext.of(d)
m_g = build_m_g(d)
print(f"M_g({d}) =")
for row in m_g.to_lists():
    print("   ", row)

# Odd dimension selects the 'minus' family of both factors.
a = build_a(ctx.eps, d + 1, ctx.n + 1)
g = build_g_factor(ctx.eps, ctx.n)
print(f"\nparity {ctx.eps.value}, n = {ctx.n}")
print("A window:", a.to_lists())
print("G factor:", g.to_lists())
print("A @ G == M_g:", (a @ g) == m_g)

# The same check, plus the gamma analogues, for a range of dimensions.
for d in range(0, 25, 4):
    rep = verify_factorization(d)
    print(f"d={d:2d}", {c.name: c.holds for c in rep.checks})
