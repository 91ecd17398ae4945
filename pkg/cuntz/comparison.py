"""
Cuntz comparison of positive elements in finite-dimensional algebras.

In ``M_k(A)`` for ``A = M_{n_1} (+) ... (+) M_{n_m}`` a positive element is Cuntz subequivalent to another exactly when
its rank is at most the other's in every block, so a class ``<a>`` is its rank vector. Order zero maps act on classes
through their supporting homomorphism: ``<phi^(k)(a)> = T <a>`` where column ``i`` of ``T`` holds the block ranks of
``pi(e^{(i)}_{11})``. Subequivalence is also made explicit: :func:`construct_witness` returns an ``x`` with
``x^* b x = a``, or ``(a - delta)_+`` for the cut-down variant.
"""
import logging
from typing import List, Sequence, Tuple, Union

import attrs
import numpy as np

from algebra.algebras import AlgElement, FdAlgebra, amplified_algebra, base_algebra
from algebra.spectral import block_eigh, block_ranks, is_positive, operator_norm
from algebra.tolerance import Tolerance
from core.exceptions import AlgebraMismatch, DeltaTooLarge, InvalidArgument, NotPositive, NotSubequivalent
from cp_maps.choi import rescale_contractive
from cp_maps.maps import CpMap
from order_zero.constants import DEFAULT_WITNESS_SAMPLES
from order_zero.decomposition import decompose
from .constants import (DELTA_CUT_ERROR, DELTA_ERROR, LEVEL_DOWN_ERROR, MORPHISM_SHAPE_ERROR, RANK_EXCEEDED_ERROR,
                        RANKS_ERROR)


logger = logging.getLogger(__name__)

TolLike = Union[Tolerance, float, None]


def _ranks(value: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(r) for r in value)


@attrs.frozen
class CuntzClass:
    """
    The class ``<a>`` of a positive element ``a`` of ``M_k(A)``.

    Attributes:
        - algebra (FdAlgebra): The base algebra ``A``.
        - k (int): The matrix level.
        - ranks (tuple of int): One rank per block, at most ``k * n_i``.
    """
    algebra: FdAlgebra
    k: int
    ranks: Tuple[int, ...] = attrs.field(converter=_ranks)

    def __attrs_post_init__(self):
        amplified_algebra(self.algebra, self.k)
        if len(self.ranks) != self.algebra.num_blocks or any(
                not 0 <= r <= self.k * n for r, n in zip(self.ranks, self.algebra.block_dims)):
            raise InvalidArgument(RANKS_ERROR.format(ranks=list(self.ranks), dims=list(self.algebra.block_dims), k=self.k))

    def __le__(self, other: 'CuntzClass') -> bool:
        return subequivalent(self, other)


def cuntz_class(a: AlgElement, k: int = 1, tol: TolLike = None) -> CuntzClass:
    """
    The rank vector of a positive element of ``M_k(A)``.

    Singular values count when they exceed ``eps_rank`` times the largest singular value of the whole element.

    Args:
        - a (AlgElement): A positive element; its algebra is read as ``M_k(A)``.
        - k (int): The matrix level.
        - tol (Tolerance, optional): The tolerance.

    Raises:
        - NotPositive: If ``a`` is not positive.
        - InvalidArgument: If the blocks of ``a`` are not multiples of ``k``.
    """
    tol = Tolerance.coerce(tol)
    algebra = base_algebra(a.algebra, k)
    if not is_positive(a, tol):
        raise NotPositive()
    return CuntzClass(algebra, k, block_ranks(a, tol))


def _check_same_level(first: CuntzClass, second: CuntzClass) -> None:
    if first.algebra != second.algebra or first.k != second.k:
        raise AlgebraMismatch()


def subequivalent(first: CuntzClass, second: CuntzClass) -> bool:
    """
    ``first <= second``: pointwise comparison of the rank vectors.

    Raises:
        - AlgebraMismatch: If the classes live over different algebras or levels.
    """
    _check_same_level(first, second)
    return all(r <= s for r, s in zip(first.ranks, second.ranks))


def amplify_class(c: CuntzClass, k: int) -> CuntzClass:
    """
    The same class seen at level ``k``, i.e. ``<a> = <a (+) 0>``.

    Raises:
        - InvalidArgument: If ``k`` is smaller than the level of ``c``.
    """
    if k < c.k:
        raise InvalidArgument(LEVEL_DOWN_ERROR.format(current=c.k, target=k))
    return CuntzClass(c.algebra, k, c.ranks)


def add_classes(first: CuntzClass, second: CuntzClass) -> CuntzClass:
    """
    ``<a> + <b> = <a (+) b>``, at level ``k_1 + k_2``.

    Raises:
        - AlgebraMismatch: If the base algebras differ.
    """
    if first.algebra != second.algebra:
        raise AlgebraMismatch()
    return CuntzClass(first.algebra, first.k + second.k, [r + s for r, s in zip(first.ranks, second.ranks)])


@attrs.frozen(eq=False)
class CuntzWitness:
    """
    An element ``x`` with ``x^* b x`` equal to ``a`` (or to ``(a - delta)_+`` after a cut-down).

    Attributes:
        - x (AlgElement): The witness.
        - residual (float): ``||a - x^* b x||``.
        - delta (float): The spectral cut.
    """
    x: AlgElement
    residual: float
    delta: float


def _descending(values: np.ndarray, vectors: np.ndarray, count: int) -> Tuple[np.ndarray, np.ndarray]:
    order = np.argsort(-values, kind='stable')[:count]
    return values[order], vectors[:, order]


def construct_witness(a: AlgElement, b: AlgElement, delta: float, tol: TolLike = None,
                      cutdown: bool = False) -> CuntzWitness:
    """
    An explicit ``x`` realizing ``a <= b``.

    In every block, ``u`` maps the top eigenvectors of ``a`` onto eigenvectors of ``b`` with eigenvalue above
    ``delta`` and ``x = b_delta^{-1/2} u a^{1/2}``, where ``b_delta^{-1/2}`` inverts ``b^{1/2}`` on its spectral
    subspace above ``delta``. Then ``x^* b x = a`` exactly. With ``cutdown``, ``a^{1/2}`` is replaced by
    ``(a - delta)_+^{1/2}`` and ``x^* b x = (a - delta)_+``, so the residual is ``min(delta, ||a||)``.

    Args:
        - a (AlgElement): A positive element.
        - b (AlgElement): A positive element of the same algebra.
        - delta (float): The spectral cut, positive.
        - tol (Tolerance, optional): The tolerance of the rank cutoff.
        - cutdown (bool): Whether to cut ``a`` down by ``delta``.

    Returns:
        - CuntzWitness: ``x`` and the achieved residual.

    Raises:
        - AlgebraMismatch: If ``a`` and ``b`` live in different algebras.
        - NotPositive: If either element is not positive.
        - InvalidArgument: If ``delta`` is not positive.
        - NotSubequivalent: If a block rank of ``a`` exceeds that of ``b``.
        - DeltaTooLarge: If too few eigenvalues of ``b`` exceed ``delta``.
    """
    tol = Tolerance.coerce(tol)
    if a.algebra != b.algebra:
        raise AlgebraMismatch()
    if not is_positive(a, tol) or not is_positive(b, tol):
        raise NotPositive()
    if not delta > 0:
        raise InvalidArgument(DELTA_ERROR.format(delta=delta))
    ranks_a, ranks_b = block_ranks(a, tol), block_ranks(b, tol)
    for block, (r, s) in enumerate(zip(ranks_a, ranks_b)):
        if r > s:
            raise NotSubequivalent(RANK_EXCEEDED_ERROR.format(block=block, first=r, second=s))

    blocks: List[np.ndarray] = []
    for block, ((alpha, u_a), (beta, u_b), r) in enumerate(zip(block_eigh(a), block_eigh(b), ranks_a)):
        available = int(np.count_nonzero(beta > delta))
        if available < r:
            raise DeltaTooLarge(DELTA_CUT_ERROR.format(block=block, available=available, delta=delta, needed=r))
        alpha, u_a = _descending(alpha, u_a, r)
        beta, u_b = _descending(beta, u_b, r)
        roots = np.sqrt(np.maximum(alpha - delta, 0.0) if cutdown else np.maximum(alpha, 0.0))
        # x = sum_j beta_j^{-1/2} alpha_j^{1/2} w_j v_j^*
        blocks.append((u_b * (roots / np.sqrt(beta))) @ u_a.conj().T)
    x = AlgElement(a.algebra, blocks)
    residual = operator_norm(a - x.adjoint() @ b @ x)
    logger.debug('Cuntz witness with residual %.3e at delta %.3e', residual, delta)
    return CuntzWitness(x=x, residual=residual, delta=float(delta))


def _matrix(value: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(t) for t in row) for row in value)


@attrs.frozen
class CuntzMorphism:
    """
    The map ``W(phi)`` on classes: ``ranks -> T ranks``.

    Attributes:
        - domain (FdAlgebra): The domain of the map.
        - codomain (FdAlgebra): The codomain of the map.
        - matrix (tuple of tuple of int): ``T``, codomain blocks x domain blocks.
    """
    domain: FdAlgebra
    codomain: FdAlgebra
    matrix: Tuple[Tuple[int, ...], ...] = attrs.field(converter=_matrix)

    def __attrs_post_init__(self):
        rows, columns = self.codomain.num_blocks, self.domain.num_blocks
        if len(self.matrix) != rows or any(len(row) != columns for row in self.matrix):
            raise InvalidArgument(MORPHISM_SHAPE_ERROR.format(rows=rows, columns=columns))

    def apply(self, c: CuntzClass) -> CuntzClass:
        """
        Raises:
            - AlgebraMismatch: If ``c`` is not a class over the domain.
        """
        if c.algebra != self.domain:
            raise AlgebraMismatch()
        ranks = np.array(self.matrix, dtype=int).reshape(self.codomain.num_blocks, -1) @ np.array(c.ranks, dtype=int)
        return CuntzClass(self.codomain, c.k, ranks.tolist())

    __call__ = apply


def induced_morphism(phi: CpMap, tol: TolLike = None, seed: int = 0,
                     samples: int = DEFAULT_WITNESS_SAMPLES) -> CuntzMorphism:
    """
    The morphism ``W(phi)`` of an order zero map, read off the supporting homomorphism.

    Maps of norm above one are rescaled first; positive multiples do not change ranks.

    Raises:
        - NotCompletelyPositive: If ``phi`` fails the Choi test.
        - NotOrderZero: If ``phi`` does not have order zero.
    """
    tol = Tolerance.coerce(tol)
    pi = decompose(rescale_contractive(phi, tol), tol, seed=seed, samples=samples).pi
    columns = [block_ranks(pi.image(i, 0, 0), tol) for i in range(phi.domain.num_blocks)]
    matrix = [[column[l] for column in columns] for l in range(phi.codomain.num_blocks)]
    logger.debug('Induced Cuntz morphism %s', matrix)
    return CuntzMorphism(phi.domain, phi.codomain, matrix)
