import logging
from typing import Callable, Union

import numpy as np

from algebra.spectral import apply_function, block_eigh, operator_norm
from algebra.tolerance import Tolerance
from core.exceptions import InvalidFunction
from cp_maps.maps import CpMap
from .constants import DEFAULT_WITNESS_SAMPLES, NEGATIVE_FUNCTION_ERROR, NONZERO_AT_ZERO_ERROR
from .decomposition import OrderZeroDecomposition, decompose, multiply_images


logger = logging.getLogger(__name__)

TolLike = Union[Tolerance, float, None]


def _evaluate(f: Callable, points: np.ndarray) -> np.ndarray:
    return np.broadcast_to(np.asarray(f(points), dtype=complex), points.shape).real


def functional_calculus(phi: Union[CpMap, OrderZeroDecomposition], f: Callable, tol: TolLike = None,
                        seed: int = 0, samples: int = DEFAULT_WITNESS_SAMPLES) -> CpMap:
    """
    The order zero map ``f(phi)(a) = f(h) pi(a)``.

    ``f`` is a function on ``[0, 1]`` with ``f(0) = 0``, evaluated on the eigenvalues of ``h`` clamped to
    ``[0, ||h||]``. It receives numpy arrays; ufuncs, ``numpy.polynomial.Polynomial`` instances and arithmetic
    lambdas all work.

    Args:
        - phi (CpMap | OrderZeroDecomposition): A contractive completely positive order zero map, or its decomposition.
        - f (callable): The function.
        - tol (Tolerance, optional): The tolerance.
        - seed (int): Seed of the witness search run by the decomposition.
        - samples (int): Budget of that search.

    Returns:
        - CpMap: A completely positive order zero map; contractive when ``|f| <= 1``.

    Raises:
        - InvalidFunction: If ``f(0) != 0`` or ``f`` is negative on the spectrum of ``h``.
        - NotOrderZero: If ``phi`` does not have order zero.
    """
    tol = Tolerance.coerce(tol)
    at_zero = float(abs(np.asarray(f(np.zeros(1)), dtype=complex).reshape(-1)[0]))
    if at_zero > tol.eps_eq:
        raise InvalidFunction(NONZERO_AT_ZERO_ERROR.format(value=at_zero))

    decomposition = phi if isinstance(phi, OrderZeroDecomposition) else decompose(phi, tol, seed=seed, samples=samples)
    h = decomposition.h
    top = operator_norm(h)

    def clamped(t: np.ndarray) -> np.ndarray:
        return _evaluate(f, np.clip(t, 0.0, top))

    spectrum = np.clip(np.concatenate([eigenvalues for eigenvalues, _ in block_eigh(h)]), 0.0, top)
    values = clamped(spectrum)
    floor = -tol.eps_psd * max(1.0, float(np.max(np.abs(values))))
    if np.any(values < floor):
        index = int(np.argmin(values))
        raise InvalidFunction(NEGATIVE_FUNCTION_ERROR.format(point=spectrum[index], value=values[index]))

    logger.debug('Functional calculus on a spectrum of %d eigenvalues', spectrum.size)
    return multiply_images(apply_function(h, clamped, tol), decomposition.pi)
