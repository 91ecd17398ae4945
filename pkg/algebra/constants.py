"""
This module defines the numerical defaults and error messages of the algebra app.

The three tolerances are the defaults of :class:`algebra.tolerance.Tolerance`; every comparison made by the library is
relative, the tolerances are multiplied by the norms of the operands involved.
"""


#: Eigenvalue floor for positivity: eigenvalues down to -EPS_PSD still count as nonnegative.
DEFAULT_EPS_PSD = 1e-8
#: Entrywise / operator-norm equality.
DEFAULT_EPS_EQ = 1e-8
#: Singular-value cutoff, relative to the largest singular value of the element.
DEFAULT_EPS_RANK = 1e-7

#: A string used when an element is built with the wrong number of blocks.
BLOCK_COUNT_ERROR = 'Expected {expected} blocks, got {actual}.'
#: A string used when a block has the wrong shape.
BLOCK_SHAPE_ERROR = 'Block {index} must be a {size}x{size} matrix, got shape {shape}.'
#: A string used when a matrix unit index is out of range.
MATRIX_UNIT_ERROR = 'Matrix unit ({block}, {p}, {q}) is outside the algebra {dims}.'
#: A string used for negative tolerances.
NEGATIVE_TOLERANCE_ERROR = 'Tolerances must be finite and nonnegative, got {name}={value}.'
#: A string used when an amplification level is not a positive integer.
AMPLIFICATION_ERROR = 'The amplification level must be a positive integer, got {k}.'
