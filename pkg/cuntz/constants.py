"""
This module defines the default spectral cut and error messages of the cuntz app.
"""


#: Spectral cut used by ``construct_witness`` when none is given.
DEFAULT_DELTA = 1e-3

#: A string used when a rank vector does not fit the algebra.
RANKS_ERROR = 'Ranks {ranks} do not fit the algebra {dims} at level k={k}.'
#: A string used when a class is moved to a lower level.
LEVEL_DOWN_ERROR = 'Cannot move a class from level {current} down to level {target}.'
#: A string used when delta is not positive.
DELTA_ERROR = 'delta must be positive, got {delta}.'
#: A string used when the rank of the first element exceeds the rank of the second in some block.
RANK_EXCEEDED_ERROR = 'Block {block}: rank {first} of the first element exceeds rank {second} of the second.'
#: A string used when too few eigenvalues of b exceed delta.
DELTA_CUT_ERROR = 'Block {block}: only {available} eigenvalues of b exceed delta={delta:.6g}, {needed} needed.'
#: A string used when a morphism matrix has the wrong shape.
MORPHISM_SHAPE_ERROR = 'The morphism matrix must be {rows}x{columns} (codomain blocks x domain blocks).'
