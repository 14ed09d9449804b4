"""Exact face-number matrices of simple polytopes and their total non-negativity."""

__version__ = "0.1.0"

from .exact import (ExactMatrix, IntegralityError, Poly, binom, determinant, mat_mul, minor,
                    poly_coeff, poly_compose, poly_derivative, poly_mul)
from .matrices import (DimensionContext, Parity, build_a, build_cap_gamma_factor, build_g_factor,
                       build_g_from_gamma, build_m_g, build_m_gamma, reverse_both,
                       verify_factorization)
from .tnn import (PathSpec, TnnVerdict, all_minors_nonnegative, lattice_path_count,
                  product_closure_check, scale, two_by_two_check)
from .vectors import (FaceData, catalogue, check_dehn_somerville, f_from_g, f_from_gamma,
                      g_from_gamma, g_from_h, h_from_g, u_poly, v_poly)
