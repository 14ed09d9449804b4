"""Brute-force total non-negativity of the face-number matrices.

Every square minor is evaluated exactly.  A failing matrix comes back with
the first negative minor as a witness.
"""
from gvector_tnn import ExactMatrix, all_minors_nonnegative, build_m_g, build_m_gamma, two_by_two_check

for d in (4, 8, 12):
    for name, m in (("M_g", build_m_g(d)), ("M_gamma", build_m_gamma(d))):
        v = all_minors_nonnegative(m)
        print(f"{name}({d}) {m.rows}x{m.cols}: holds={v.holds}, minors checked={v.checked_minors}")

# Restricting to 2x2 minors is much cheaper.
print("2x2 only, M_g(12):", two_by_two_check(build_m_g(12)))

# A matrix that is not TNN, and its witness.
bad = ExactMatrix.from_rows([[1, 2, 1], [3, 4, 1], [1, 1, 1]])
print(all_minors_nonnegative(bad).to_dict())

# Same verdict from a process pool; order of evaluation does not matter.
serial = all_minors_nonnegative(build_m_g(10))
parallel = all_minors_nonnegative(build_m_g(10), workers=2)
print("serial == parallel:", serial == parallel)
