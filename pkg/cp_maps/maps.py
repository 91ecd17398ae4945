"""
Linear maps between finite-dimensional C*-algebras.

A map is determined by the images of the matrix units ``e^{(i)}_{pq}`` of its domain. :class:`CpMap` stores them, per
domain block ``i``, as one array of shape ``(n_i, n_i, N, N)`` whose entry ``[p, q]`` is the image of ``e^{(i)}_{pq}``
embedded as a block-diagonal ``N x N`` matrix (``N`` the total size of the codomain). Applying the map, building its
Choi matrices and composing maps are then plain ``einsum`` contractions.
"""
from typing import List, Sequence, Tuple

import attrs
import numpy as np

from algebra.algebras import AlgElement, FdAlgebra, amplified_algebra, make_algebra, tensor_algebra, tensor_permutation
from core.exceptions import AlgebraMismatch, InvalidMap
from .constants import COMPOSE_ERROR, IMAGE_ALGEBRA_ERROR, IMAGE_BLOCKS_ERROR, IMAGE_GRID_ERROR


def _tensors(value: Sequence) -> Tuple[np.ndarray, ...]:
    tensors = []
    for tensor in value:
        array = np.array(tensor, dtype=complex)
        array.setflags(write=False)
        tensors.append(array)
    return tuple(tensors)


def block_mask(algebra: FdAlgebra) -> np.ndarray:
    """
    Boolean ``N x N`` mask of the diagonal blocks of ``algebra``'s embedding.
    """
    labels = np.repeat(np.arange(algebra.num_blocks), algebra.block_dims)
    return labels[:, None] == labels[None, :]


@attrs.frozen(eq=False)
class CpMap:
    """
    A linear map ``domain -> codomain`` given by the images of the domain's matrix units.

    No positivity is assumed; see :func:`cp_maps.choi.is_completely_positive`.

    Attributes:
        - domain (FdAlgebra): The domain.
        - codomain (FdAlgebra): The codomain.
        - tensors (tuple of np.ndarray): Per domain block ``i`` an array of shape ``(n_i, n_i, N, N)``.
    """
    domain: FdAlgebra
    codomain: FdAlgebra
    tensors: Tuple[np.ndarray, ...] = attrs.field(converter=_tensors)

    def __attrs_post_init__(self):
        size = self.codomain.size
        if len(self.tensors) != self.domain.num_blocks:
            raise InvalidMap(IMAGE_BLOCKS_ERROR.format(expected=self.domain.num_blocks, actual=len(self.tensors)))
        for block, (tensor, n) in enumerate(zip(self.tensors, self.domain.block_dims)):
            if tensor.shape != (n, n, size, size):
                raise InvalidMap(IMAGE_GRID_ERROR.format(block=block, size=n))

    def image(self, block: int, p: int, q: int) -> AlgElement:
        """
        The image of the matrix unit ``e^{(block)}_{pq}``.
        """
        return self.codomain.extract(self.tensors[block][p, q])

    @property
    def images(self) -> List[List[List[AlgElement]]]:
        """
        The images as nested lists: ``images[i][p][q]`` is the image of ``e^{(i)}_{pq}``.
        """
        return [
            [[self.image(i, p, q) for q in range(n)] for p in range(n)]
            for i, n in enumerate(self.domain.block_dims)
        ]

    def __call__(self, a: AlgElement) -> AlgElement:
        return apply(self, a)


def make_map(domain: FdAlgebra, codomain: FdAlgebra, images: Sequence) -> CpMap:
    """
    Build a map from the images of the matrix units.

    Args:
        - domain (FdAlgebra): The domain.
        - codomain (FdAlgebra): The codomain.
        - images (list): ``images[i][p][q]`` is the image of ``e^{(i)}_{pq}``, an element of ``codomain``.

    Returns:
        - CpMap: The map; no positivity is assumed.

    Raises:
        - InvalidMap: If the nesting does not match the domain or an image is not an element of the codomain.
    """
    if len(images) != domain.num_blocks:
        raise InvalidMap(IMAGE_BLOCKS_ERROR.format(expected=domain.num_blocks, actual=len(images)))
    tensors = []
    for i, n in enumerate(domain.block_dims):
        grid = images[i]
        if len(grid) != n or any(len(row) != n for row in grid):
            raise InvalidMap(IMAGE_GRID_ERROR.format(block=i, size=n))
        tensor = np.zeros((n, n, codomain.size, codomain.size), dtype=complex)
        for p in range(n):
            for q in range(n):
                image = grid[p][q]
                if not isinstance(image, AlgElement) or image.algebra != codomain:
                    raise InvalidMap(IMAGE_ALGEBRA_ERROR.format(block=i, p=p, q=q))
                tensor[p, q] = image.embedded()
        tensors.append(tensor)
    return CpMap(domain, codomain, tensors)


def from_tensors(domain: FdAlgebra, codomain: FdAlgebra, tensors: Sequence[np.ndarray]) -> CpMap:
    """
    Build a map from raw ``(n_i, n_i, N, N)`` arrays, dropping entries outside the codomain's diagonal blocks.
    """
    mask = block_mask(codomain)
    return CpMap(domain, codomain, [np.where(mask, tensor, 0.0) for tensor in tensors])


def apply(phi: CpMap, a: AlgElement) -> AlgElement:
    """
    Evaluate ``phi(a) = sum a^{(i)}_{pq} phi(e^{(i)}_{pq})``.

    Raises:
        - AlgebraMismatch: If ``a`` is not an element of the domain.
    """
    if a.algebra != phi.domain:
        raise AlgebraMismatch()
    size = phi.codomain.size
    total = np.zeros((size, size), dtype=complex)
    for block, tensor in zip(a.blocks, phi.tensors):
        total += np.einsum('pq,pqxy->xy', block, tensor)
    return phi.codomain.extract(total)


def identity_map(algebra: FdAlgebra) -> CpMap:
    return make_map(algebra, algebra, [
        [[algebra.matrix_unit(i, p, q) for q in range(n)] for p in range(n)]
        for i, n in enumerate(algebra.block_dims)
    ])


def transpose_map(algebra: FdAlgebra) -> CpMap:
    """
    The blockwise transpose ``e_pq -> e_qp``: positive, but not completely positive unless all blocks are 1x1.
    """
    return make_map(algebra, algebra, [
        [[algebra.matrix_unit(i, q, p) for q in range(n)] for p in range(n)]
        for i, n in enumerate(algebra.block_dims)
    ])


def zero_map(domain: FdAlgebra, codomain: FdAlgebra) -> CpMap:
    size = codomain.size
    return CpMap(domain, codomain, [np.zeros((n, n, size, size)) for n in domain.block_dims])


def scale_map(phi: CpMap, scalar: complex) -> CpMap:
    return CpMap(phi.domain, phi.codomain, [scalar * tensor for tensor in phi.tensors])


def add_maps(phi: CpMap, psi: CpMap) -> CpMap:
    """
    The pointwise sum of two maps between the same algebras.

    Raises:
        - AlgebraMismatch: If the domains or codomains differ.
    """
    if phi.domain != psi.domain or phi.codomain != psi.codomain:
        raise AlgebraMismatch()
    return CpMap(phi.domain, phi.codomain, [x + y for x, y in zip(phi.tensors, psi.tensors)])


def map_distance(phi: CpMap, psi: CpMap) -> float:
    """
    The largest entrywise difference between the images of the matrix units of two maps.

    Raises:
        - AlgebraMismatch: If the domains or codomains differ.
    """
    if phi.domain != psi.domain or phi.codomain != psi.codomain:
        raise AlgebraMismatch()
    return max(float(np.max(np.abs(x - y))) if x.size else 0.0 for x, y in zip(phi.tensors, psi.tensors))


def compose(psi: CpMap, phi: CpMap) -> CpMap:
    """
    The composition ``psi o phi``.

    Args:
        - psi (CpMap): The outer map.
        - phi (CpMap): The inner map; its codomain must be the domain of ``psi``.

    Returns:
        - CpMap: ``a -> psi(phi(a))``.

    Raises:
        - AlgebraMismatch: If the maps do not chain.
    """
    if phi.codomain != psi.domain:
        raise AlgebraMismatch(COMPOSE_ERROR)
    size = psi.codomain.size
    tensors = []
    for tensor in phi.tensors:
        n = tensor.shape[0]
        composed = np.zeros((n, n, size, size), dtype=complex)
        for j, outer in enumerate(psi.tensors):
            window = phi.codomain.block_slice(j)
            composed += np.einsum('pqrs,rsxy->pqxy', tensor[:, :, window, window], outer)
        tensors.append(composed)
    return CpMap(phi.domain, psi.codomain, tensors)


def tensor(phi: CpMap, psi: CpMap) -> CpMap:
    """
    The tensor product map ``phi (x) psi``.

    Domain and codomain are :func:`algebra.algebras.tensor_algebra` of the factors, so blocks come in lexicographic
    order with ``phi``'s blocks major. In finite dimensions the minimal and maximal tensor products agree, so this is
    the induced map for both.

    Returns:
        - CpMap: The map with ``(phi (x) psi)(e_pq (x) e'_rs) = phi(e_pq) (x) psi(e'_rs)``.
    """
    domain = tensor_algebra(phi.domain, psi.domain)
    codomain = tensor_algebra(phi.codomain, psi.codomain)
    perm = tensor_permutation(phi.codomain, psi.codomain)
    size = codomain.size
    tensors = []
    for first in phi.tensors:
        for second in psi.tensors:
            n, m = first.shape[0], second.shape[0]
            product = np.einsum('pqxy,rsuv->prqsxuyv', first, second).reshape(n * m, n * m, size, size)
            tensors.append(product[:, :, perm][:, :, :, perm])
    return CpMap(domain, codomain, tensors)


def amplify(phi: CpMap, k: int) -> CpMap:
    """
    The amplification ``phi^(k) = id_{M_k} (x) phi : M_k(A) -> M_k(B)``, with ``M_k`` as the outer factor.

    Raises:
        - InvalidArgument: If ``k`` is not a positive integer.
    """
    amplified_algebra(phi.domain, k)
    return tensor(identity_map(make_algebra([k])), phi)
