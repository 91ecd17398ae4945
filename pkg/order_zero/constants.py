"""
This module defines the residual names, search budget and error messages of the order_zero app.
"""


#: ``max ||h pi(e) - phi(e)||`` over the matrix units.
RECONSTRUCTION = 'reconstruction'
#: Largest defect of the matrix-unit relations of ``pi``, cross-block products included.
MULTIPLICATIVITY = 'multiplicativity'
#: ``max ||pi(e_pq)^* - pi(e_qp)||``.
ADJOINT = 'adjoint'
#: ``max ||[h, pi(e)]||`` over the matrix units.
COMMUTATOR = 'commutator'
#: ``||pi(1) - s||``.
SUPPORT = 'support'
#: ``| ||h|| - ||phi|| |``.
NORM = 'norm'
#: Residual names in report order.
RESIDUALS = (RECONSTRUCTION, MULTIPLICATIVITY, ADJOINT, COMMUTATOR, SUPPORT, NORM)

#: Random self-adjoint elements tried by the witness search.
DEFAULT_WITNESS_SAMPLES = 64

#: A string used when the decomposition fails its checks.
DECOMPOSITION_FAILED_ERROR = 'The map does not have order zero: {failures}.'
#: A string used when a map exceeds norm one.
NOT_CONTRACTIVE_ERROR = 'The map has norm {norm:.6g} > 1; rescale it first.'
#: A string used when a function does not vanish at zero.
NONZERO_AT_ZERO_ERROR = 'The function must vanish at 0, got f(0) = {value:.6g}.'
#: A string used when a function is negative on the spectrum of h.
NEGATIVE_FUNCTION_ERROR = 'The function is negative on the spectrum of h: f({point:.6g}) = {value:.6g}.'
