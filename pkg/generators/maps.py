"""
Seeded construction of *-homomorphisms, order zero maps and generic completely positive maps.

A *-homomorphism ``pi: A -> B`` between finite-dimensional algebras is, up to a unitary in every codomain block, a
direct sum of multiplicity copies of the domain blocks: block ``l`` of ``pi(a)`` is
``U_l diag(a_1 (x) 1_{m_l1}, a_2 (x) 1_{m_l2}, ..., 0) U_l^*``. The commutant of ``pi(A)`` inside ``pi(1) B pi(1)``
consists of the elements ``U_l diag(1_{n_1} (x) H_l1, ...) U_l^*``, so a positive ``h`` of that shape gives the order
zero map ``h pi``.
"""
import logging
from typing import List, Sequence, Tuple

import attrs
import numpy as np
from scipy.linalg import block_diag

from algebra.algebras import FdAlgebra, make_algebra
from algebra.tolerance import Tolerance
from core.exceptions import EmbeddingTooLarge, InvalidArgument
from cp_maps.choi import from_kraus, map_norm, rescale_contractive
from cp_maps.maps import CpMap, add_maps, scale_map
from .constants import (CODOMAIN_LAYOUTS, EMBEDDING_CAPACITY_ERROR, MIN_H_EIGENVALUE, MULTIPLICITY_SHAPE_ERROR,
                        NEGATIVE_MULTIPLICITY_ERROR, PERTURBATION_KRAUS_COUNT, ZERO_EIGENVALUE_PROBABILITY)
from .elements import ginibre, random_unitary
from .rng import check_seed, derive_rng


logger = logging.getLogger(__name__)


def _multiplicities(value: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(row) for row in value)
    except TypeError:
        raise InvalidArgument(NEGATIVE_MULTIPLICITY_ERROR)
    for row in rows:
        for m in row:
            if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0:
                raise InvalidArgument(NEGATIVE_MULTIPLICITY_ERROR)
    return tuple(tuple(int(m) for m in row) for row in rows)


@attrs.frozen
class GenSpec:
    """
    Embedding data of a random *-homomorphism.

    Attributes:
        - domain (FdAlgebra): The domain ``A``.
        - codomain (FdAlgebra): The codomain ``B``.
        - multiplicities (tuple of tuple of int): ``multiplicities[l][i]`` copies of domain block ``i`` inside codomain
          block ``l``.
        - seed (int): The seed, an unsigned 64-bit integer.
        - strict_h (bool): Whether ``h`` is strictly positive on the support of ``pi``.
    """
    domain: FdAlgebra
    codomain: FdAlgebra
    multiplicities: Tuple[Tuple[int, ...], ...] = attrs.field(converter=_multiplicities)
    seed: int = attrs.field(default=0, converter=check_seed)
    strict_h: bool = True

    def __attrs_post_init__(self):
        rows, columns = self.codomain.num_blocks, self.domain.num_blocks
        if len(self.multiplicities) != rows or any(len(row) != columns for row in self.multiplicities):
            raise InvalidArgument(MULTIPLICITY_SHAPE_ERROR.format(rows=rows, columns=columns))
        for l, size in enumerate(self.codomain.block_dims):
            needed = self.used(l)
            if needed > size:
                raise EmbeddingTooLarge(EMBEDDING_CAPACITY_ERROR.format(block=l, size=size, needed=needed))

    def used(self, block: int) -> int:
        """
        Size of the corner of codomain block ``block`` occupied by the embedding.
        """
        return sum(m * n for m, n in zip(self.multiplicities[block], self.domain.block_dims))

    @classmethod
    def random(cls, domain: FdAlgebra, codomain: FdAlgebra, seed: int = 0, strict_h: bool = True) -> 'GenSpec':
        """
        A spec with multiplicities drawn so that the embedding fits.

        Raises:
            - EmbeddingTooLarge: If no domain block fits into any codomain block.
        """
        return cls(domain, codomain, fitting_multiplicities(domain, codomain, seed), seed, strict_h)


def fitting_multiplicities(domain: FdAlgebra, codomain: FdAlgebra, seed: int = 0) -> List[List[int]]:
    """
    Draw a multiplicity matrix that fits, with at least one nonzero entry.

    Codomain blocks are filled independently: the domain blocks are visited in random order and each takes a uniform
    number of copies among those still fitting.

    Raises:
        - EmbeddingTooLarge: If no domain block fits into any codomain block.
    """
    if min(domain.block_dims) > max(codomain.block_dims):
        raise EmbeddingTooLarge()
    rng = derive_rng(seed, 'multiplicities')
    rows = []
    for size in codomain.block_dims:
        row, free = [0] * domain.num_blocks, size
        for i in rng.permutation(domain.num_blocks):
            n = domain.block_dims[i]
            row[i] = int(rng.integers(0, free // n + 1))
            free -= row[i] * n
        rows.append(row)
    if not any(any(row) for row in rows):
        # Put one copy of the smallest domain block into the largest codomain block.
        rows[int(np.argmax(codomain.block_dims))][int(np.argmin(domain.block_dims))] = 1
    return rows


def pick_codomain(domain: FdAlgebra, seed: int = 0) -> FdAlgebra:
    """
    A codomain of total size at most 9 with a block large enough for the smallest domain block.
    """
    layouts = [layout for layout in CODOMAIN_LAYOUTS if max(layout) >= min(domain.block_dims)]
    rng = derive_rng(seed, 'codomain')
    return make_algebra(layouts[int(rng.integers(0, len(layouts)))])


def _codomain_unitaries(spec: GenSpec) -> List[np.ndarray]:
    rng = derive_rng(spec.seed, 'hom')
    return [random_unitary(rng, size) for size in spec.codomain.block_dims]


def _hom_tensors(spec: GenSpec) -> List[np.ndarray]:
    """
    The ``(n_i, n_i, N, N)`` image arrays of the homomorphism of ``spec``.
    """
    size = spec.codomain.size
    unitaries = _codomain_unitaries(spec)
    tensors = [np.zeros((n, n, size, size), dtype=complex) for n in spec.domain.block_dims]
    for l, (u, width) in enumerate(zip(unitaries, spec.codomain.block_dims)):
        window = spec.codomain.block_slice(l)
        start = 0
        for i, (m, n) in enumerate(zip(spec.multiplicities[l], spec.domain.block_dims)):
            if not m:
                continue
            # Columns of U_l spanning the corner of domain block i.
            corner = u[:, start:start + n * m]
            for p in range(n):
                for q in range(n):
                    unit = np.zeros((n, n))
                    unit[p, q] = 1.0
                    tensors[i][p, q, window, window] = corner @ np.kron(unit, np.eye(m)) @ corner.conj().T
            start += n * m
    return tensors


def _commutant_element(spec: GenSpec) -> np.ndarray:
    """
    The embedded ``h``: per codomain block ``U_l diag(1_{n_i} (x) H_li, ..., 0) U_l^*``, with ``H_li`` positive and
    of norm at most one.
    """
    rng = derive_rng(spec.seed, 'h')
    unitaries = _codomain_unitaries(spec)
    blocks = []
    for l, (u, width) in enumerate(zip(unitaries, spec.codomain.block_dims)):
        parts = []
        for m, n in zip(spec.multiplicities[l], spec.domain.block_dims):
            if not m:
                continue
            eigenvalues = rng.uniform(MIN_H_EIGENVALUE, 1.0, size=m)
            if not spec.strict_h:
                eigenvalues[rng.random(m) < ZERO_EIGENVALUE_PROBABILITY] = 0.0
            v = random_unitary(rng, m)
            parts.append(np.kron(np.eye(n), (v * eigenvalues) @ v.conj().T))
        free = width - spec.used(l)
        inner = block_diag(*parts, np.zeros((free, free))) if parts else np.zeros((width, width))
        blocks.append(u @ inner @ u.conj().T)
    return block_diag(*blocks)


def random_hom(spec: GenSpec) -> CpMap:
    """
    The *-homomorphism of ``spec``: multiplicity embedding plus zero corner, conjugated by Haar unitaries.

    Returns:
        - CpMap: The homomorphism; bit-identical for equal specs.
    """
    logger.debug('Generating homomorphism %s -> %s, seed %d', spec.domain.block_dims, spec.codomain.block_dims,
                 spec.seed)
    return CpMap(spec.domain, spec.codomain, _hom_tensors(spec))


def random_order_zero(spec: GenSpec) -> CpMap:
    """
    The order zero map ``h pi`` with ``pi = random_hom(spec)`` and ``h`` a random positive contraction in the
    commutant of ``pi(A)`` inside ``pi(1) B pi(1)``.

    Returns:
        - CpMap: A contractive completely positive order zero map.
    """
    logger.debug('Generating order zero map %s -> %s, seed %d', spec.domain.block_dims, spec.codomain.block_dims,
                 spec.seed)
    h = _commutant_element(spec)
    tensors = [np.einsum('xz,pqzy->pqxy', h, tensor) for tensor in _hom_tensors(spec)]
    return CpMap(spec.domain, spec.codomain, tensors)


def random_cp_map(domain: FdAlgebra, codomain: FdAlgebra, kraus_count: int = 2, seed: int = 0) -> CpMap:
    """
    A generic completely positive map of norm one from Gaussian Kraus operators.

    Args:
        - domain (FdAlgebra): The domain.
        - codomain (FdAlgebra): The codomain.
        - kraus_count (int): Kraus operators per domain block, at least one.
        - seed (int): The seed.

    Raises:
        - InvalidArgument: If ``kraus_count`` is smaller than one.
    """
    if isinstance(kraus_count, bool) or not isinstance(kraus_count, (int, np.integer)) or kraus_count < 1:
        raise InvalidArgument(f'The number of Kraus operators must be a positive integer, got {kraus_count}.')
    rng = derive_rng(seed, 'cp')
    operators = [[ginibre(rng, codomain.size, n) for _ in range(kraus_count)] for n in domain.block_dims]
    phi = from_kraus(domain, codomain, operators)
    return scale_map(phi, 1.0 / map_norm(phi))


def perturb(phi: CpMap, epsilon: float, seed: int = 0, tol=None) -> CpMap:
    """
    ``phi + epsilon * psi`` with ``psi`` a random completely positive map of norm one, rescaled to be contractive.

    Args:
        - phi (CpMap): A completely positive map.
        - epsilon (float): The perturbation size; zero returns ``phi`` itself.
        - seed (int): The seed of ``psi``.
        - tol (Tolerance, optional): The tolerance of the contractivity check.

    Raises:
        - InvalidArgument: If ``epsilon`` is negative.
    """
    if epsilon < 0:
        raise InvalidArgument(f'The perturbation size must be nonnegative, got {epsilon}.')
    if epsilon == 0:
        return phi
    noise = random_cp_map(phi.domain, phi.codomain, PERTURBATION_KRAUS_COUNT, seed=seed)
    return rescale_contractive(add_maps(phi, scale_map(noise, epsilon)), Tolerance.coerce(tol))
