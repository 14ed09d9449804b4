"""The generating polynomials behind the factorization, checked exactly."""
from gvector_tnn.exact import Poly
from gvector_tnn.genfun import (closed_form, f_gen, g_gen, identity1_check, identity2_check,
                                lhs_generating_poly, ode_residual_f, ode_residual_g)

for a in range(4):
    print(f"F_{a}(z) = {f_gen(a)}")
    print(f"G_{a}(s) = {g_gen(a)}   closed form matches: {g_gen(a) == closed_form(a)}")

# Both binomial identities, every (i, k) for n up to 8.
print("identity (1):", all(identity1_check(n).holds for n in range(9)))
print("identity (2):", all(identity2_check(n).holds for n in range(9)))

# Second-order equations: the s-form annihilates G_a, and so does the
# z-form with first-order coefficient 2(z - a(4z+1)).
print("G residuals:", [str(ode_residual_g(a)) for a in range(5)])
print("F residuals (corrected):", [str(ode_residual_f(a)) for a in range(5)])
print("F residuals (a(z - a(4z+1))):", [str(ode_residual_f(a, 'printed')) for a in range(5)])

# Summing a column of the identity against s^i.
n, k = 4, 1
print(lhs_generating_poly(n, k) == Poly([0, 1, 1]) ** k * g_gen(n - k))
