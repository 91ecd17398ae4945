"""
Random elements, unitaries, orthogonal pairs and traces.
"""
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.stats import unitary_group

from algebra.algebras import AlgElement, FdAlgebra
from algebra.spectral import negative_part, operator_norm, positive_part
from core.exceptions import InvalidArgument
from traces.functionals import TracialFunctional
from .rng import derive_rng


def ginibre(rng: np.random.Generator, rows: int, columns: int) -> np.ndarray:
    """
    A matrix with independent standard complex Gaussian entries.
    """
    return (rng.standard_normal((rows, columns)) + 1j * rng.standard_normal((rows, columns))) / np.sqrt(2)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """
    A Haar random ``n x n`` unitary; a random phase when ``n == 1``.
    """
    if n == 1:
        return np.exp(2j * np.pi * rng.random()).reshape(1, 1)
    return unitary_group.rvs(n, random_state=rng)


def sample_self_adjoint(algebra: FdAlgebra, rng: np.random.Generator) -> AlgElement:
    blocks = []
    for n in algebra.block_dims:
        g = ginibre(rng, n, n)
        blocks.append((g + g.conj().T) / 2)
    return AlgElement(algebra, blocks)


def random_element(algebra: FdAlgebra, seed: int = 0) -> AlgElement:
    rng = derive_rng(seed, 'element')
    return AlgElement(algebra, [ginibre(rng, n, n) for n in algebra.block_dims])


def random_self_adjoint(algebra: FdAlgebra, seed: int = 0) -> AlgElement:
    return sample_self_adjoint(algebra, derive_rng(seed, 'self_adjoint'))


def random_positive(algebra: FdAlgebra, ranks: Optional[Sequence[int]] = None, seed: int = 0) -> AlgElement:
    """
    A random positive element of norm one (or zero) with prescribed block ranks.

    Args:
        - algebra (FdAlgebra): The algebra.
        - ranks (list of int, optional): The rank of every block; drawn uniformly from ``0..n_i`` when omitted.
        - seed (int): The seed.

    Returns:
        - AlgElement: ``sum G G^*`` per block with ``G`` an ``n_i x r_i`` Gaussian matrix, rescaled to norm one.

    Raises:
        - InvalidArgument: If a rank is negative or exceeds its block size.
    """
    rng = derive_rng(seed, 'positive')
    if ranks is None:
        ranks = [int(rng.integers(0, n + 1)) for n in algebra.block_dims]
    if len(ranks) != algebra.num_blocks or any(not 0 <= r <= n for r, n in zip(ranks, algebra.block_dims)):
        raise InvalidArgument(f'Ranks {list(ranks)} do not fit the algebra {list(algebra.block_dims)}.')
    blocks = []
    for n, r in zip(algebra.block_dims, ranks):
        g = ginibre(rng, n, r)
        blocks.append(g @ g.conj().T)
    element = AlgElement(algebra, blocks)
    norm = operator_norm(element)
    return element * (1.0 / norm) if norm > 0 else element


def random_orthogonal_pair(algebra: FdAlgebra, seed: int = 0) -> Tuple[AlgElement, AlgElement]:
    """
    The positive and negative parts of a random self-adjoint element: two positive, mutually orthogonal elements.
    """
    x = random_self_adjoint(algebra, seed=seed)
    return positive_part(x), negative_part(x)


def random_trace(algebra: FdAlgebra, seed: int = 0) -> TracialFunctional:
    """
    A tracial functional with weights drawn uniformly from ``[0, 1)``.
    """
    rng = derive_rng(seed, 'trace')
    return TracialFunctional(algebra, rng.random(algebra.num_blocks))
