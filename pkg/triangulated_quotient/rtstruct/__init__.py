"""Right triangulated structures: triangles, triangulations and axiom checks."""
from .triangle import Triangle, rotate, trivial_triangle, identity_triangle, \
    direct_sum_triangle, sextuple_isomorphic, complete_morphism, derotate
from .triangulation import Triangulation
from .axioms import ALL_LEVELS, check_axioms, check_derotation
