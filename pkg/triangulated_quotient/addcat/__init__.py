"""Additive Krull-Schmidt categories: objects, morphisms, functors and presentations."""
from .obj import Obj
from .mor import Mor, column, row, diagonal, permutation_isomorphism
from .functor import AdditiveFunctorData, apply_functor, functor_full_on, \
    functor_faithful_on
from .presentation import CategoryPresentation, validate_presentation
