"""
Finite-dimensional C*-algebras as ordered direct sums of full matrix algebras.

An :class:`FdAlgebra` is described by its block sizes ``[n_1, ..., n_k]``; an :class:`AlgElement` stores one complex
``n_i x n_i`` matrix per block. Whenever a single matrix is more convenient (maps, Choi matrices) an element is
*embedded* as the block-diagonal matrix of total size ``n = sum(n_i)``.
"""
from functools import reduce
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import attrs
import numpy as np
from scipy.linalg import block_diag

from core.exceptions import AlgebraMismatch, InvalidAlgebra, InvalidArgument
from .constants import AMPLIFICATION_ERROR, BLOCK_COUNT_ERROR, BLOCK_SHAPE_ERROR, MATRIX_UNIT_ERROR
from .enums import ArithOp


Scalar = Union[int, float, complex]


def _block_dims(value: Sequence[int]) -> Tuple[int, ...]:
    """
    Converter for ``FdAlgebra.block_dims``.

    Raises:
        - InvalidAlgebra: If the list is empty or holds anything but positive integers.
    """
    try:
        dims = tuple(value)
    except TypeError:
        raise InvalidAlgebra()
    if not dims:
        raise InvalidAlgebra()
    for n in dims:
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
            raise InvalidAlgebra()
    return tuple(int(n) for n in dims)


@attrs.frozen
class FdAlgebra:
    """
    The C*-algebra ``M_{n_1} (+) ... (+) M_{n_k}``.

    Attributes:
        - block_dims (tuple of int): The block sizes, in order.
    """
    block_dims: Tuple[int, ...] = attrs.field(converter=_block_dims)

    @property
    def num_blocks(self) -> int:
        return len(self.block_dims)

    @property
    def size(self) -> int:
        """
        Total matrix size ``n = sum(n_i)`` of the embedding.
        """
        return sum(self.block_dims)

    @property
    def linear_dim(self) -> int:
        """
        Dimension as a complex vector space, ``sum(n_i ** 2)``.
        """
        return sum(n * n for n in self.block_dims)

    @property
    def offsets(self) -> Tuple[int, ...]:
        """
        Row offset of every block inside the embedding.
        """
        return tuple(int(o) for o in np.cumsum((0,) + self.block_dims[:-1]))

    def block_slice(self, block: int) -> slice:
        offset = self.offsets[block]
        return slice(offset, offset + self.block_dims[block])

    def element(self, blocks: Sequence) -> 'AlgElement':
        return AlgElement(self, blocks)

    def unit(self) -> 'AlgElement':
        return AlgElement(self, [np.eye(n) for n in self.block_dims])

    def zero(self) -> 'AlgElement':
        return AlgElement(self, [np.zeros((n, n)) for n in self.block_dims])

    def matrix_unit(self, block: int, p: int, q: int) -> 'AlgElement':
        """
        The matrix unit ``e^{(block)}_{pq}``.

        Raises:
            - InvalidArgument: If the indices fall outside the algebra.
        """
        if not (0 <= block < self.num_blocks and 0 <= p < self.block_dims[block] and 0 <= q < self.block_dims[block]):
            raise InvalidArgument(MATRIX_UNIT_ERROR.format(block=block, p=p, q=q, dims=list(self.block_dims)))
        blocks = [np.zeros((n, n)) for n in self.block_dims]
        blocks[block][p, q] = 1.0
        return AlgElement(self, blocks)

    def matrix_units(self) -> Iterator[Tuple[int, int, int]]:
        """
        Iterate over the matrix-unit indices ``(block, p, q)``, block-major and row-major.
        """
        for block, n in enumerate(self.block_dims):
            for p in range(n):
                for q in range(n):
                    yield block, p, q

    def embed(self, blocks: Sequence[np.ndarray]) -> np.ndarray:
        """
        The block-diagonal matrix of total size ``n`` holding ``blocks``.
        """
        return block_diag(*blocks).astype(complex)

    def extract(self, matrix: np.ndarray) -> 'AlgElement':
        """
        The element formed by the diagonal blocks of an ``n x n`` matrix; off-diagonal blocks are dropped.
        """
        return AlgElement(self, [matrix[self.block_slice(i), self.block_slice(i)] for i in range(self.num_blocks)])


def _blocks(value: Sequence) -> Tuple[np.ndarray, ...]:
    blocks = []
    for block in value:
        array = np.array(block, dtype=complex)
        array.setflags(write=False)
        blocks.append(array)
    return tuple(blocks)


@attrs.frozen(eq=False)
class AlgElement:
    """
    An element of an :class:`FdAlgebra`: one complex matrix per block.

    Elements are immutable; the stored arrays are read-only. The arithmetic operators act blockwise: ``+``, ``-``,
    ``@`` (product) and ``*`` with a scalar.
    """
    algebra: FdAlgebra
    blocks: Tuple[np.ndarray, ...] = attrs.field(converter=_blocks)

    def __attrs_post_init__(self):
        if len(self.blocks) != self.algebra.num_blocks:
            raise InvalidArgument(BLOCK_COUNT_ERROR.format(expected=self.algebra.num_blocks, actual=len(self.blocks)))
        for index, (block, n) in enumerate(zip(self.blocks, self.algebra.block_dims)):
            if block.shape != (n, n):
                raise InvalidArgument(BLOCK_SHAPE_ERROR.format(index=index, size=n, shape=block.shape))

    def _check_same_algebra(self, other: 'AlgElement') -> None:
        if not isinstance(other, AlgElement) or other.algebra != self.algebra:
            raise AlgebraMismatch()

    def __add__(self, other: 'AlgElement') -> 'AlgElement':
        self._check_same_algebra(other)
        return AlgElement(self.algebra, [a + b for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other: 'AlgElement') -> 'AlgElement':
        self._check_same_algebra(other)
        return AlgElement(self.algebra, [a - b for a, b in zip(self.blocks, other.blocks)])

    def __neg__(self) -> 'AlgElement':
        return AlgElement(self.algebra, [-a for a in self.blocks])

    def __matmul__(self, other: 'AlgElement') -> 'AlgElement':
        self._check_same_algebra(other)
        return AlgElement(self.algebra, [a @ b for a, b in zip(self.blocks, other.blocks)])

    def __mul__(self, scalar: Scalar) -> 'AlgElement':
        if isinstance(scalar, AlgElement):
            return NotImplemented
        return AlgElement(self.algebra, [scalar * a for a in self.blocks])

    __rmul__ = __mul__

    def adjoint(self) -> 'AlgElement':
        return AlgElement(self.algebra, [a.conj().T for a in self.blocks])

    def embedded(self) -> np.ndarray:
        return self.algebra.embed(self.blocks)

    def commutator(self, other: 'AlgElement') -> 'AlgElement':
        return self @ other - other @ self

    def is_close(self, other: 'AlgElement', atol: float = 1e-8) -> bool:
        """
        Blockwise ``allclose`` with absolute tolerance ``atol``; elements of different algebras are never close.
        """
        if not isinstance(other, AlgElement) or other.algebra != self.algebra:
            return False
        return all(np.allclose(a, b, rtol=0.0, atol=atol) for a, b in zip(self.blocks, other.blocks))


def make_algebra(block_dims: Sequence[int]) -> FdAlgebra:
    """
    Build the algebra ``M_{n_1} (+) ... (+) M_{n_k}``.

    Args:
        - block_dims (list of int): The block sizes; nonempty, every entry at least 1.

    Returns:
        - FdAlgebra: The algebra.

    Raises:
        - InvalidAlgebra: For an empty list or a non-positive entry.
    """
    return FdAlgebra(block_dims)


def element_arith(a: AlgElement, b: Optional[Union[AlgElement, Scalar]], op: Union[ArithOp, str]) -> AlgElement:
    """
    Blockwise matrix arithmetic.

    Args:
        - a (AlgElement): The first operand.
        - b (AlgElement | scalar | None): The second operand; a scalar for ``scale``, ignored for ``adjoint``.
        - op (ArithOp): One of ``add``, ``mul``, ``adjoint``, ``scale``.

    Returns:
        - AlgElement: The result.

    Raises:
        - AlgebraMismatch: If the two elements of a binary operation live in different algebras.
        - InvalidArgument: For an unknown operation.
    """
    try:
        op = ArithOp(op)
    except ValueError:
        raise InvalidArgument(f'Unknown operation {op!r}.')
    if op == ArithOp.ADD:
        return a + b
    if op == ArithOp.MUL:
        return a @ b
    if op == ArithOp.ADJOINT:
        return a.adjoint()
    return a * b


def tensor_algebra(first: FdAlgebra, second: FdAlgebra) -> FdAlgebra:
    """
    The tensor product algebra: blocks ``n_i * m_j`` in lexicographic order (first factor major).
    """
    return FdAlgebra([n * m for n in first.block_dims for m in second.block_dims])


def tensor_elements(a: AlgElement, b: AlgElement) -> AlgElement:
    """
    The elementary tensor ``a (x) b``: block ``(i, j)`` is ``kron(a_i, b_j)``.
    """
    algebra = tensor_algebra(a.algebra, b.algebra)
    return AlgElement(algebra, [np.kron(x, y) for x in a.blocks for y in b.blocks])


def tensor_permutation(first: FdAlgebra, second: FdAlgebra) -> np.ndarray:
    """
    Index permutation taking ``kron(x, y)`` of two embedded elements to the embedding of ``x (x) y`` in
    :func:`tensor_algebra`.

    For block-diagonal ``X`` and ``Y``, ``np.kron(X, Y)[perm][:, perm]`` is the block-diagonal embedding of the tensor
    product element.

    Returns:
        - np.ndarray: Integer index array of length ``first.size * second.size``.
    """
    width = second.size
    perm = [
        (first.offsets[i] + x) * width + second.offsets[j] + y
        for i, n in enumerate(first.block_dims)
        for j, m in enumerate(second.block_dims)
        for x in range(n)
        for y in range(m)
    ]
    return np.array(perm, dtype=int)


def amplified_algebra(algebra: FdAlgebra, k: int) -> FdAlgebra:
    """
    ``M_k(A)``, i.e. :func:`tensor_algebra` of ``M_k`` and ``A`` with ``M_k`` as the outer factor.

    Raises:
        - InvalidArgument: If ``k`` is not a positive integer.
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidArgument(AMPLIFICATION_ERROR.format(k=k))
    return tensor_algebra(FdAlgebra([k]), algebra)


def matrix_element(entries: Sequence[Sequence[AlgElement]]) -> AlgElement:
    """
    The element ``[a_rs]`` of ``M_k(A)`` built from a ``k x k`` array of elements of ``A``.

    Block ``i`` is ``sum_rs E_rs (x) (a_rs)_i``, consistent with :func:`amplified_algebra`.

    Raises:
        - AlgebraMismatch: If the entries live in different algebras.
        - InvalidArgument: If the array is not square.
    """
    k = len(entries)
    if k == 0 or any(len(row) != k for row in entries):
        raise InvalidArgument('Expected a square array of elements.')
    algebra = entries[0][0].algebra
    for row in entries:
        for entry in row:
            if entry.algebra != algebra:
                raise AlgebraMismatch()
    blocks = [
        np.block([[entries[r][s].blocks[i] for s in range(k)] for r in range(k)])
        for i in range(algebra.num_blocks)
    ]
    return AlgElement(amplified_algebra(algebra, k), blocks)


def direct_sum(a: AlgElement, b: AlgElement, base: FdAlgebra) -> AlgElement:
    """
    ``a (+) b`` for ``a`` in ``M_k(A)`` and ``b`` in ``M_l(A)``: blockwise ``diag(a_i, b_i)`` in ``M_{k+l}(A)``.

    Args:
        - a (AlgElement): Element of an amplification of ``base``.
        - b (AlgElement): Element of an amplification of ``base``.
        - base (FdAlgebra): The algebra ``A``.

    Raises:
        - AlgebraMismatch: If either element is not in an amplification of ``base``.
    """
    k = amplification_level(a.algebra, base)
    l = amplification_level(b.algebra, base)
    blocks = [block_diag(x, y) for x, y in zip(a.blocks, b.blocks)]
    return AlgElement(amplified_algebra(base, k + l), blocks)


def amplification_level(algebra: FdAlgebra, base: FdAlgebra) -> int:
    """
    The ``k`` with ``algebra == M_k(base)``.

    Raises:
        - AlgebraMismatch: If there is none.
    """
    if algebra.num_blocks != base.num_blocks or algebra.block_dims[0] % base.block_dims[0]:
        raise AlgebraMismatch()
    k = algebra.block_dims[0] // base.block_dims[0]
    if amplified_algebra(base, k) != algebra:
        raise AlgebraMismatch()
    return k


def base_algebra(algebra: FdAlgebra, k: int) -> FdAlgebra:
    """
    The ``A`` with ``algebra == M_k(A)``.

    Raises:
        - InvalidArgument: If some block size is not divisible by ``k``.
    """
    amplified_algebra(algebra, k)
    if any(n % k for n in algebra.block_dims):
        raise InvalidArgument(f'Block sizes {list(algebra.block_dims)} are not multiples of k={k}.')
    return FdAlgebra([n // k for n in algebra.block_dims])


def sum_elements(elements: List[AlgElement], algebra: FdAlgebra) -> AlgElement:
    """
    Sum of a possibly empty list of elements of ``algebra``.
    """
    return reduce(lambda x, y: x + y, elements, algebra.zero())
