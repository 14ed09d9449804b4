"""Moving between f-, g-, h- and gamma-vectors."""
from gvector_tnn import (catalogue, check_dehn_somerville, f_from_g, f_from_gamma, g_from_gamma,
                         h_from_g)

# A 3-cube: gamma = (1, 0).
gamma = (1, 0)
g = g_from_gamma(3, gamma)
print("cube g:", g, " h:", h_from_g(3, g), " f:", f_from_gamma(3, gamma))

# The polynomial expansion and the matrix product give the same f-vector.
print(f_from_g(3, g, route="poly"), f_from_g(3, g, route="matrix"))

# Dehn-Somerville: f-vectors of simple polytopes have a symmetric h-vector.
print(check_dehn_somerville(3, (1, 6, 12, 8)), check_dehn_somerville(3, (1, 6, 12, 9)))

for name, params in (("simplex", {"d": 4}), ("cube", {"d": 4}), ("polygon", {"m": 7}),
                     ("polygon", {"m": 3})):
    e = catalogue(name, **params)
    print(f"{name}{params}: g={e.g} gamma={e.gamma} f={e.expected_f} {e.note}")
