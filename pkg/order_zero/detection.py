"""
Deciding the order zero property.

A completely positive map has order zero exactly when, after rescaling to norm at most one, its decomposition
``phi = h pi`` passes verification: maps of the form ``h pi`` with ``h`` commuting with ``pi(A)`` have order zero, and
for an order zero map the compressed homomorphism ``pi = h^+ phi`` satisfies every checked identity.
"""
import logging
from typing import Optional, Union

import attrs

from algebra.tolerance import Tolerance
from core.exceptions import NotOrderZero
from cp_maps.choi import map_norm
from cp_maps.maps import CpMap, scale_map
from .constants import DEFAULT_WITNESS_SAMPLES
from .decomposition import DecompositionReport, OrderZeroDecomposition, decompose
from .witness import OrderZeroWitness


logger = logging.getLogger(__name__)

TolLike = Union[Tolerance, float, None]


@attrs.frozen(eq=False)
class OrderZeroCheck:
    """
    Outcome of :func:`check_order_zero`.

    Attributes:
        - order_zero (bool): The verdict.
        - decomposition (OrderZeroDecomposition or None): The decomposition of the rescaled map, on success.
        - witness (OrderZeroWitness or None): A violating pair, on failure when the search found one.
        - report (DecompositionReport): The residuals.
        - scale (float): The factor the map was multiplied by before decomposing (1 for contractive maps).
    """
    order_zero: bool
    report: DecompositionReport
    decomposition: Optional[OrderZeroDecomposition] = None
    witness: Optional[OrderZeroWitness] = None
    scale: float = 1.0

    def __bool__(self) -> bool:
        return self.order_zero


def check_order_zero(phi: CpMap, tol: TolLike = None, seed: int = 0,
                     samples: int = DEFAULT_WITNESS_SAMPLES) -> OrderZeroCheck:
    """
    Decide whether a completely positive map has order zero.

    Args:
        - phi (CpMap): A completely positive map of any norm.
        - tol (Tolerance, optional): The tolerance.
        - seed (int): Seed of the witness search.
        - samples (int): Budget of the witness search.

    Returns:
        - OrderZeroCheck: The verdict with the decomposition or the witness.

    Raises:
        - NotCompletelyPositive: If ``phi`` fails the Choi test.
    """
    tol = Tolerance.coerce(tol)
    norm = map_norm(phi, tol)
    scale = 1.0 / norm if norm > 1.0 + tol.eps_eq else 1.0
    contractive = scale_map(phi, scale) if scale != 1.0 else phi
    try:
        decomposition = decompose(contractive, tol, seed=seed, samples=samples)
    except NotOrderZero as error:
        logger.debug('Map rejected: %s', error)
        return OrderZeroCheck(order_zero=False, report=error.report, witness=error.witness, scale=scale)
    return OrderZeroCheck(order_zero=True, report=decomposition.report, decomposition=decomposition, scale=scale)


def is_order_zero(phi: CpMap, tol: TolLike = None, seed: int = 0,
                  samples: int = DEFAULT_WITNESS_SAMPLES) -> bool:
    """
    Raises:
        - NotCompletelyPositive: If ``phi`` fails the Choi test.
    """
    return check_order_zero(phi, tol, seed=seed, samples=samples).order_zero
