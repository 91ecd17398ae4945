"""
This module defines the default error messages of the exceptions in :mod:`core.exceptions`.

Each exception falls back to its message here when it is raised without one, so that the reports written by the
management commands always carry a readable reason.
"""


#: Raised for empty block lists or non-positive block sizes.
INVALID_ALGEBRA_ERROR = 'An algebra needs at least one block and every block size must be a positive integer.'
#: Raised when two operands live in different algebras.
ALGEBRA_MISMATCH_ERROR = 'The operands belong to different algebras.'
#: Raised when a self-adjoint element is required.
NOT_SELF_ADJOINT_ERROR = 'The element is not self-adjoint.'
#: Raised when a positive element is required.
NOT_POSITIVE_ERROR = 'The element is not positive.'
#: Raised for out-of-range scalar arguments.
INVALID_ARGUMENT_ERROR = 'Invalid argument.'
#: Raised when the images of the matrix units do not fit the domain and codomain.
INVALID_MAP_ERROR = 'The images do not match the shapes of the domain and codomain.'
#: Raised when a completely positive map is required.
NOT_COMPLETELY_POSITIVE_ERROR = 'The map is not completely positive.'
#: Raised when a contractive map is required.
NOT_CONTRACTIVE_ERROR = 'The map is not contractive.'
#: Raised when a map fails the order zero checks.
NOT_ORDER_ZERO_ERROR = 'The map does not have order zero.'
#: Raised for functions that do not vanish at zero or are negative on the spectrum.
INVALID_FUNCTION_ERROR = 'The function must vanish at 0 and be nonnegative on the spectrum.'
#: Raised when a cone representation violates its invariants.
INVALID_REP_ERROR = 'The cone representation violates its invariants.'
#: Raised when the rank vectors do not compare.
NOT_SUBEQUIVALENT_ERROR = 'The first element is not Cuntz subequivalent to the second.'
#: Raised when the spectral cut of the second element leaves too little room.
DELTA_TOO_LARGE_ERROR = 'The spectral cut at delta leaves no room for a partial isometry.'
#: Raised when the requested multiplicities do not fit the codomain blocks.
EMBEDDING_TOO_LARGE_ERROR = 'The multiplicities exceed the size of a codomain block.'
#: Raised for malformed JSON documents.
SCHEMA_ERROR = 'The document does not match the expected schema.'
#: Used by the serializers for NaN and infinite entries.
NON_FINITE_ERROR = 'Expected finite numbers, got {value}.'
