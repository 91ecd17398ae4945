"""
This module defines the verification budget and error messages of the cone_corr app.
"""


#: Random pairs of elementary tensors checked by ``verify_hom``.
DEFAULT_VERIFY_PAIRS = 100
#: Largest monomial degree used by ``verify_hom``.
MAX_MONOMIAL_DEGREE = 4

#: A string used when a level lies outside (0, 1].
LEVEL_RANGE_ERROR = 'Level {index} has t = {t:.6g}, outside (0, 1].'
#: A string used when the levels are not strictly increasing.
LEVEL_ORDER_ERROR = 'Levels must be strictly increasing in t.'
#: A string used when a level is not a projection.
LEVEL_PROJECTION_ERROR = 'The element of level {index} is not a projection.'
#: A string used when two levels overlap.
LEVEL_OVERLAP_ERROR = 'The projections of levels {first} and {second} are not orthogonal.'
#: A string used when the levels do not sum to pi(1).
LEVEL_SUPPORT_ERROR = 'The level projections do not sum to pi(1).'
#: A string used when a level does not commute with the homomorphism.
LEVEL_COMMUTATION_ERROR = 'The projection of level {index} does not commute with the image of pi.'
#: A string used when the algebras of a representation do not match.
REP_ALGEBRA_ERROR = 'The levels and the homomorphism must live in the codomain of the representation.'
#: A string used when a polynomial has a constant term.
CONSTANT_TERM_ERROR = 'Elements of C_0((0,1]) vanish at 0; the constant term is {value:.6g}.'
