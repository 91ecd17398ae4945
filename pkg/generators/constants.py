"""
This module defines the sampling constants and error messages of the generators app.
"""


#: Smallest eigenvalue of the commutant part of ``h`` when it is required to be strictly positive.
MIN_H_EIGENVALUE = 0.05
#: Probability of an exact zero eigenvalue of ``h`` when strict positivity is not required.
ZERO_EIGENVALUE_PROBABILITY = 0.3
#: Block layouts of the domains drawn by the factories.
DOMAIN_LAYOUTS = ([1], [2], [1, 1], [2, 3], [3, 3])
#: Block layouts of the codomains drawn by the factories; all have total size at most 9.
CODOMAIN_LAYOUTS = ([3], [4], [6], [9], [2, 3], [3, 6], [4, 5], [3, 3, 3], [1, 8], [6, 3])
#: Number of Kraus operators of the noise added by ``perturb``.
PERTURBATION_KRAUS_COUNT = 2

#: A string used when the multiplicity matrix has the wrong shape.
MULTIPLICITY_SHAPE_ERROR = 'Multiplicities must form a {rows}x{columns} matrix (codomain blocks x domain blocks).'
#: A string used for negative multiplicities.
NEGATIVE_MULTIPLICITY_ERROR = 'Multiplicities must be nonnegative integers.'
#: A string used when an embedding exceeds a codomain block.
EMBEDDING_CAPACITY_ERROR = 'Codomain block {block} of size {size} cannot hold an embedding of size {needed}.'
#: A string used for seeds outside the unsigned 64-bit range.
SEED_ERROR = 'Seeds must be integers in [0, 2**64), got {seed}.'
