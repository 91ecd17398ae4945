"""
Search for a pair of orthogonal positive elements whose images under a map are not orthogonal.
"""
import logging
from itertools import combinations
from typing import Iterator, Optional, Tuple, Union

import attrs

from algebra.algebras import AlgElement
from algebra.spectral import minimal_projections, negative_part, operator_norm, positive_part
from algebra.tolerance import Tolerance
from cp_maps.maps import CpMap, apply
from generators.elements import sample_self_adjoint
from generators.rng import derive_rng
from .constants import DEFAULT_WITNESS_SAMPLES


logger = logging.getLogger(__name__)

TolLike = Union[Tolerance, float, None]


@attrs.frozen(eq=False)
class OrderZeroWitness:
    """
    Positive, mutually orthogonal elements ``a`` and ``b`` with ``||phi(a) phi(b)|| = violation`` above the tolerance.
    """
    a: AlgElement
    b: AlgElement
    violation: float


def violation(phi: CpMap, a: AlgElement, b: AlgElement) -> float:
    return operator_norm(apply(phi, a) @ apply(phi, b))


def _candidates(phi: CpMap, seed: int, samples: int) -> Iterator[Tuple[AlgElement, AlgElement]]:
    """
    Candidate pairs: for every random self-adjoint ``x``, first ``(x_+, x_-)``, then all pairs of distinct rank-one
    eigenprojections of ``x``.
    """
    rng = derive_rng(seed, 'witness')
    for _ in range(samples):
        x = sample_self_adjoint(phi.domain, rng)
        yield positive_part(x), negative_part(x)
        yield from combinations(minimal_projections(x), 2)


def find_witness(phi: CpMap, tol: TolLike = None, seed: int = 0,
                 samples: int = DEFAULT_WITNESS_SAMPLES) -> Optional[OrderZeroWitness]:
    """
    Look for a pair of orthogonal positive elements that ``phi`` does not keep orthogonal.

    Args:
        - phi (CpMap): A completely positive map.
        - tol (Tolerance, optional): A pair is returned once ``||phi(a) phi(b)|| > eps_eq * max(1, ||a|| ||b||)``.
        - seed (int): Seed of the random self-adjoint elements.
        - samples (int): Number of random self-adjoint elements.

    Returns:
        - OrderZeroWitness or None: The first violating pair, or None when no candidate violates.
    """
    tol = Tolerance.coerce(tol)
    for tried, (a, b) in enumerate(_candidates(phi, seed, samples), start=1):
        value = violation(phi, a, b)
        if value > tol.scaled(operator_norm(a) * operator_norm(b)):
            logger.debug('Witness found after %d candidate pairs, violation %.3e', tried, value)
            return OrderZeroWitness(a, b, value)
    logger.debug('No witness among %d samples', samples)
    return None
