"""Quotients Z/D of a right triangulated category with the induced shift and triangles."""
from .presentation import HypothesisError, QuotientPresentation, check_hypotheses, \
    build_quotient
from .sigma import fix_sigma_triangles, sigma_on_morphism, build_sigma, \
    quotient_triangle, quotient_cone, induced_triangulation, cone_stays_in_z, \
    factor_through_d_triangle, vanishing_pulls_back, check_vanishing_pullback, \
    check_induced_square
from .omega import fix_omega_triangles, build_omega, check_sigma_equivalence, \
    check_degeneration
