"""
Complete positivity through Choi matrices, Kraus (Stinespring) data and norms of completely positive maps.
"""
import logging
from typing import List, Sequence, Tuple, Union

import attrs
import numpy as np

from algebra.algebras import AlgElement, FdAlgebra
from algebra.spectral import min_eigenvalue, operator_norm
from algebra.tolerance import Tolerance
from core.exceptions import InvalidMap, NotCompletelyPositive
from .constants import KRAUS_SHAPE_ERROR
from .maps import CpMap, apply, from_tensors, scale_map


logger = logging.getLogger(__name__)

TolLike = Union[Tolerance, float, None]


def choi_blocks(phi: CpMap) -> List[np.ndarray]:
    """
    The Choi matrices ``C_i = sum_pq E_pq (x) phi(e^{(i)}_pq)``, one per domain block.

    The rows of ``C_i`` are indexed by ``(p, x)`` with ``p`` the domain row and ``x`` the row of the embedded codomain,
    so ``C_i`` has size ``n_i * N``.

    Args:
        - phi (CpMap): The map.

    Returns:
        - list of np.ndarray: The Choi matrices, in domain block order.
    """
    return [
        tensor.transpose(0, 2, 1, 3).reshape(tensor.shape[0] * tensor.shape[2], tensor.shape[0] * tensor.shape[2])
        for tensor in phi.tensors
    ]


def choi_min_eigenvalue(phi: CpMap) -> float:
    """
    The smallest eigenvalue over the Hermitian parts of all Choi matrices.
    """
    values = [np.linalg.eigvalsh((c + c.conj().T) / 2) for c in choi_blocks(phi)]
    return min(float(v[0]) if v.size else 0.0 for v in values)


def is_completely_positive(phi: CpMap, tol: TolLike = None) -> bool:
    """
    Choi's criterion: every Choi matrix is Hermitian within ``eps_eq`` and positive semidefinite within ``eps_psd``.

    Args:
        - phi (CpMap): The map.
        - tol (Tolerance, optional): The tolerance, relative to the norm of each Choi matrix.

    Returns:
        - bool: True if ``phi`` is completely positive.
    """
    tol = Tolerance.coerce(tol)
    for c in choi_blocks(phi):
        if not c.size:
            continue
        scale = max(1.0, float(np.linalg.norm(c, 2)))
        if float(np.max(np.abs(c - c.conj().T))) > tol.eps_eq * scale:
            return False
        if float(np.linalg.eigvalsh((c + c.conj().T) / 2)[0]) < -tol.eps_psd * scale:
            return False
    return True


def require_completely_positive(phi: CpMap, tol: TolLike = None) -> None:
    """
    Raises:
        - NotCompletelyPositive: If the Choi test fails.
    """
    if not is_completely_positive(phi, tol):
        raise NotCompletelyPositive(
            f'The map is not completely positive (smallest Choi eigenvalue {choi_min_eigenvalue(phi):.3e}).'
        )


def _kraus_operators(value: Sequence) -> Tuple[Tuple[np.ndarray, ...], ...]:
    operators = []
    for block in value:
        arrays = []
        for operator in block:
            array = np.array(operator, dtype=complex)
            array.setflags(write=False)
            arrays.append(array)
        operators.append(tuple(arrays))
    return tuple(operators)


@attrs.frozen(eq=False)
class KrausDecomposition:
    """
    Kraus operators of a completely positive map.

    Per domain block ``i`` a list of ``N x n_i`` matrices ``V_j`` with ``phi(a) = sum_j V_j a_i V_j^*`` on block ``i``,
    where ``N`` is the total size of the codomain.
    """
    domain: FdAlgebra
    codomain: FdAlgebra
    operators: Tuple[Tuple[np.ndarray, ...], ...] = attrs.field(converter=_kraus_operators)

    @property
    def count(self) -> int:
        return sum(len(block) for block in self.operators)

    def reconstruct(self) -> CpMap:
        return from_kraus(self.domain, self.codomain, self.operators)


def from_kraus(domain: FdAlgebra, codomain: FdAlgebra, kraus_ops: Sequence[Sequence[np.ndarray]]) -> CpMap:
    """
    The completely positive map ``a -> sum_j V_j a_i V_j^*`` compressed to the diagonal blocks of the codomain.

    Args:
        - domain (FdAlgebra): The domain.
        - codomain (FdAlgebra): The codomain.
        - kraus_ops (list of list of np.ndarray): Per domain block, ``N x n_i`` Kraus operators; an empty list gives
          zero on that block.

    Returns:
        - CpMap: The map.

    Raises:
        - InvalidMap: For a wrong number of blocks or a wrongly shaped operator.
    """
    if len(kraus_ops) != domain.num_blocks:
        raise InvalidMap(f'Expected Kraus operators for {domain.num_blocks} domain blocks, got {len(kraus_ops)}.')
    size = codomain.size
    tensors = []
    for block, (operators, n) in enumerate(zip(kraus_ops, domain.block_dims)):
        stack = np.zeros((0, size, n), dtype=complex)
        if len(operators):
            stack = np.array(operators, dtype=complex)
        if stack.shape[1:] != (size, n):
            raise InvalidMap(KRAUS_SHAPE_ERROR.format(block=block, rows=size, columns=n, shape=stack.shape[1:]))
        tensors.append(np.einsum('kxp,kyq->pqxy', stack, stack.conj()))
    return from_tensors(domain, codomain, tensors)


def kraus(phi: CpMap, tol: TolLike = None) -> KrausDecomposition:
    """
    Kraus operators from the eigendecomposition of the Choi matrices.

    Every Choi matrix is split along the diagonal blocks of the codomain; eigenvalues above ``eps_rank`` times the
    largest eigenvalue of the Choi matrix are kept, and each kept eigenpair ``(w, v)`` gives the operator
    ``sqrt(w) * v.reshape(n_i, N_l).T`` placed in the rows of codomain block ``l``.

    Args:
        - phi (CpMap): A completely positive map.
        - tol (Tolerance, optional): The tolerance.

    Returns:
        - KrausDecomposition: Operators reconstructing ``phi`` within ``eps_eq``.

    Raises:
        - NotCompletelyPositive: If ``phi`` fails the Choi test.
    """
    tol = Tolerance.coerce(tol)
    require_completely_positive(phi, tol)
    size = phi.codomain.size
    operators = []
    for tensor in phi.tensors:
        n = tensor.shape[0]
        pieces = []
        for l, width in enumerate(phi.codomain.block_dims):
            window = phi.codomain.block_slice(l)
            sub = tensor[:, :, window, window].transpose(0, 2, 1, 3).reshape(n * width, n * width)
            pieces.append((window, width, np.linalg.eigh((sub + sub.conj().T) / 2)))
        largest = max((float(w[-1]) for _, _, (w, _) in pieces if w.size), default=0.0)
        cutoff = tol.eps_rank * largest
        block_operators = []
        for window, width, (eigenvalues, vectors) in pieces:
            for value, vector in zip(eigenvalues, vectors.T):
                if largest <= 0 or value <= cutoff:
                    continue
                operator = np.zeros((size, n), dtype=complex)
                operator[window] = np.sqrt(value) * vector.reshape(n, width).T
                block_operators.append(operator)
        operators.append(block_operators)
    decomposition = KrausDecomposition(phi.domain, phi.codomain, operators)
    logger.debug('Kraus decomposition with %d operators', decomposition.count)
    return decomposition


def unit_image(phi: CpMap) -> AlgElement:
    return apply(phi, phi.domain.unit())


def map_norm(phi: CpMap, tol: TolLike = None) -> float:
    """
    The norm of a completely positive map, ``||phi(1)||``.

    Raises:
        - NotCompletelyPositive: If ``phi`` fails the Choi test.
    """
    require_completely_positive(phi, tol)
    return operator_norm(unit_image(phi))


def is_contractive(phi: CpMap, tol: TolLike = None) -> bool:
    tol = Tolerance.coerce(tol)
    return map_norm(phi, tol) <= 1.0 + tol.eps_eq


def rescale_contractive(phi: CpMap, tol: TolLike = None) -> CpMap:
    """
    Divide a completely positive map by its norm when the norm exceeds one; contractive maps are returned as they are.

    Raises:
        - NotCompletelyPositive: If ``phi`` fails the Choi test.
    """
    tol = Tolerance.coerce(tol)
    norm = map_norm(phi, tol)
    if norm <= 1.0 + tol.eps_eq:
        return phi
    logger.debug('Rescaling map of norm %.6g', norm)
    return scale_map(phi, 1.0 / norm)


def schwarz_defect(phi: CpMap, a: AlgElement) -> float:
    """
    The smallest eigenvalue of ``phi(a^* a) - phi(a)^* phi(a)``; nonnegative (up to rounding) for contractive
    completely positive maps.
    """
    image = apply(phi, a)
    return min_eigenvalue(apply(phi, a.adjoint() @ a) - image.adjoint() @ image)
