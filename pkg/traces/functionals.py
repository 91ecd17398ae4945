"""
Tracial and linear functionals on finite-dimensional C*-algebras.

A linear functional is stored through its values on the matrix units, ``c^{(i)}_{pq} = l(e^{(i)}_{pq})``, so that
``l(a) = sum c^{(i)}_{pq} a^{(i)}_{pq}``. A tracial functional is ``tau(a) = sum w_i Tr(a_i)`` with weights
``w_i >= 0``; its coefficients are ``w_i`` times the identity.
"""
from typing import Optional, Sequence, Tuple, Union

import attrs
import numpy as np

from algebra.algebras import AlgElement, FdAlgebra, amplified_algebra
from algebra.tolerance import Tolerance
from core.exceptions import AlgebraMismatch, InvalidArgument
from cp_maps.maps import CpMap
from .constants import COEFFICIENTS_SHAPE_ERROR, NEGATIVE_WEIGHT_ERROR, WEIGHTS_LENGTH_ERROR


TolLike = Union[Tolerance, float, None]


def _weights(value: Sequence[float]) -> np.ndarray:
    array = np.array(value, dtype=float).reshape(-1)
    array.setflags(write=False)
    return array


@attrs.frozen(eq=False)
class TracialFunctional:
    """
    The positive tracial functional ``tau(a) = sum w_i Tr(a_i)``.

    Attributes:
        - algebra (FdAlgebra): The algebra.
        - weights (np.ndarray): One nonnegative weight per block.
    """
    algebra: FdAlgebra
    weights: np.ndarray = attrs.field(converter=_weights)

    def __attrs_post_init__(self):
        if self.weights.shape != (self.algebra.num_blocks,):
            raise InvalidArgument(WEIGHTS_LENGTH_ERROR.format(expected=self.algebra.num_blocks,
                                                              actual=self.weights.size))
        if np.any(self.weights < 0):
            raise InvalidArgument(NEGATIVE_WEIGHT_ERROR.format(weights=list(self.weights)))

    def __call__(self, a: AlgElement) -> complex:
        return apply_trace(self, a)


def _coefficients(value: Sequence) -> Tuple[np.ndarray, ...]:
    blocks = []
    for block in value:
        array = np.array(block, dtype=complex)
        array.setflags(write=False)
        blocks.append(array)
    return tuple(blocks)


@attrs.frozen(eq=False)
class LinearFunctional:
    """
    A linear functional given by its values on the matrix units.

    Attributes:
        - algebra (FdAlgebra): The algebra.
        - coefficients (tuple of np.ndarray): ``coefficients[i][p, q] = l(e^{(i)}_{pq})``.
    """
    algebra: FdAlgebra
    coefficients: Tuple[np.ndarray, ...] = attrs.field(converter=_coefficients)

    def __attrs_post_init__(self):
        if len(self.coefficients) != self.algebra.num_blocks:
            raise InvalidArgument(WEIGHTS_LENGTH_ERROR.format(expected=self.algebra.num_blocks,
                                                              actual=len(self.coefficients)))
        for index, (block, n) in enumerate(zip(self.coefficients, self.algebra.block_dims)):
            if block.shape != (n, n):
                raise InvalidArgument(COEFFICIENTS_SHAPE_ERROR.format(index=index, size=n))

    def __call__(self, a: AlgElement) -> complex:
        return apply_functional(self, a)


@attrs.frozen(eq=False)
class TracialCheck:
    """
    Outcome of :func:`check_tracial`.

    Attributes:
        - tracial (bool): Whether the functional is tracial within the tolerance.
        - positive (bool): Whether, in addition, all weights are nonnegative.
        - weights (np.ndarray): ``l(e^{(i)}_{11})`` per block (real parts).
        - defect (float): The largest off-diagonal coefficient or spread of the diagonal within a block.
        - trace (TracialFunctional or None): The functional as a trace, when it is tracial and positive.
    """
    tracial: bool
    positive: bool
    weights: np.ndarray
    defect: float
    trace: Optional[TracialFunctional] = None

    def __bool__(self) -> bool:
        return self.tracial


def apply_trace(tau: TracialFunctional, a: AlgElement) -> complex:
    """
    Evaluate ``tau(a) = sum w_i Tr(a_i)``.

    Raises:
        - AlgebraMismatch: If ``a`` lives in another algebra.
    """
    if a.algebra != tau.algebra:
        raise AlgebraMismatch()
    return complex(sum(w * np.trace(block) for w, block in zip(tau.weights, a.blocks)))


def apply_functional(functional: LinearFunctional, a: AlgElement) -> complex:
    """
    Raises:
        - AlgebraMismatch: If ``a`` lives in another algebra.
    """
    if a.algebra != functional.algebra:
        raise AlgebraMismatch()
    return complex(sum(np.sum(c * block) for c, block in zip(functional.coefficients, a.blocks)))


def as_functional(tau: TracialFunctional) -> LinearFunctional:
    return LinearFunctional(tau.algebra, [w * np.eye(n) for w, n in zip(tau.weights, tau.algebra.block_dims)])


def compose_with_map(tau: TracialFunctional, phi: CpMap) -> LinearFunctional:
    """
    The functional ``tau o phi`` on the domain of ``phi``.

    Args:
        - tau (TracialFunctional): A trace on the codomain of ``phi``.
        - phi (CpMap): The map.

    Returns:
        - LinearFunctional: Coefficients ``tau(phi(e^{(i)}_{pq}))``.

    Raises:
        - AlgebraMismatch: If ``tau`` is not defined on the codomain of ``phi``.
    """
    if tau.algebra != phi.codomain:
        raise AlgebraMismatch()
    diagonal_weights = np.repeat(tau.weights, phi.codomain.block_dims)
    return LinearFunctional(phi.domain, [np.einsum('pqxx,x->pq', t, diagonal_weights) for t in phi.tensors])


def check_tracial(functional: LinearFunctional, tol: TolLike = None) -> TracialCheck:
    """
    Decide whether a functional is tracial.

    A functional on a sum of matrix algebras is tracial exactly when it vanishes on the off-diagonal matrix units and
    is constant on the diagonal ones within every block.

    Args:
        - functional (LinearFunctional): The functional.
        - tol (Tolerance, optional): Defects are compared with ``eps_eq * max(1, max |c|)``.

    Returns:
        - TracialCheck: The verdict, the weights ``l(e^{(i)}_{11})`` and the defect.
    """
    tol = Tolerance.coerce(tol)
    scale = max((float(np.max(np.abs(c))) for c in functional.coefficients), default=0.0)
    defect = 0.0
    for c in functional.coefficients:
        diagonal = np.diag(c)
        off_diagonal = c - np.diag(diagonal)
        defect = max(defect, float(np.max(np.abs(off_diagonal))), float(np.max(np.abs(diagonal - diagonal[0]))))
    weights = np.array([c[0, 0].real for c in functional.coefficients])
    tracial = defect <= tol.scaled(scale)
    # Weights must also be real for a self-adjoint functional.
    if tracial:
        tracial = all(abs(c[0, 0].imag) <= tol.scaled(scale) for c in functional.coefficients)
    positive = tracial and bool(np.all(weights >= -tol.eps_psd * max(1.0, scale)))
    trace = TracialFunctional(functional.algebra, np.maximum(weights, 0.0)) if positive else None
    return TracialCheck(tracial=tracial, positive=positive, weights=weights, defect=defect, trace=trace)


def is_tracial(functional: LinearFunctional, tol: TolLike = None) -> bool:
    return check_tracial(functional, tol).tracial


def amplify_trace(tau: TracialFunctional, k: int) -> TracialFunctional:
    """
    ``tau (x) Tr`` on ``M_k(B)``: the same weights on the amplified blocks.

    Raises:
        - InvalidArgument: If ``k`` is not a positive integer.
    """
    return TracialFunctional(amplified_algebra(tau.algebra, k), tau.weights)


def amplify_functional(functional: LinearFunctional, k: int) -> LinearFunctional:
    """
    ``l (x) Tr`` on ``M_k(A)``, i.e. ``[a_rs] -> sum_r l(a_rr)``.

    Raises:
        - InvalidArgument: If ``k`` is not a positive integer.
    """
    algebra = amplified_algebra(functional.algebra, k)
    return LinearFunctional(algebra, [np.kron(np.eye(k), c) for c in functional.coefficients])
