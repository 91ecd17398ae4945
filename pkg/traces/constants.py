"""
This module defines the error messages of the traces app.
"""


#: A string used when a weight vector does not match the algebra.
WEIGHTS_LENGTH_ERROR = 'Expected {expected} weights, got {actual}.'
#: A string used for negative weights.
NEGATIVE_WEIGHT_ERROR = 'Trace weights must be nonnegative, got {weights}.'
#: A string used when functional coefficients do not match the algebra.
COEFFICIENTS_SHAPE_ERROR = 'Coefficient block {index} must be a {size}x{size} matrix.'
#: A string used when a composed functional is not a positive trace.
NOT_TRACIAL_ERROR = 'The composed functional is not a positive trace (defect {defect:.3e}).'
