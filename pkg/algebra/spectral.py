"""
Spectral tools for elements of finite-dimensional C*-algebras: positivity, spectral projections, functional calculus,
orthogonality and ranks.

Every comparison is relative: a tolerance ``eps`` is applied as ``eps * max(1, norm)`` where ``norm`` is the size of
the operands involved (see :meth:`algebra.tolerance.Tolerance.scaled`).
"""
import logging
from typing import Callable, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from core.exceptions import AlgebraMismatch, NotPositive, NotSelfAdjoint
from .algebras import AlgElement
from .tolerance import Tolerance


logger = logging.getLogger(__name__)

TolLike = Union[Tolerance, float, None]


class SpectralComponent(NamedTuple):
    """
    One cluster of the spectrum: an eigenvalue and the spectral projection onto its eigenspace.
    """
    eigenvalue: float
    projection: AlgElement


def operator_norm(a: AlgElement) -> float:
    """
    The C*-norm: the largest singular value over all blocks.

    Args:
        - a (AlgElement): The element.

    Returns:
        - float: ``max_i ||a_i||_2``.
    """
    return max(float(np.linalg.norm(block, 2)) if block.size else 0.0 for block in a.blocks)


def is_self_adjoint(a: AlgElement, tol: TolLike = None) -> bool:
    tol = Tolerance.coerce(tol)
    threshold = tol.scaled(operator_norm(a))
    return all(float(np.max(np.abs(block - block.conj().T))) <= threshold for block in a.blocks)


def _require_self_adjoint(a: AlgElement, tol: Tolerance) -> None:
    if not is_self_adjoint(a, tol):
        raise NotSelfAdjoint()


def block_eigh(a: AlgElement) -> List[Tuple[np.ndarray, np.ndarray]]:
    """
    Eigendecomposition of the Hermitian part of every block, eigenvalues ascending.

    Returns:
        - list of (np.ndarray, np.ndarray): ``(eigenvalues, eigenvectors)`` per block, eigenvectors as columns.
    """
    return [np.linalg.eigh((block + block.conj().T) / 2) for block in a.blocks]


def is_positive(a: AlgElement, tol: TolLike = None) -> bool:
    """
    Check positivity: ``a`` is self-adjoint within ``eps_eq`` and no eigenvalue lies below ``-eps_psd``.

    Args:
        - a (AlgElement): The element to test.
        - tol (Tolerance, optional): The tolerance; defaults to the library defaults.

    Returns:
        - bool: True if ``a`` is positive, False otherwise (including non-self-adjoint input).
    """
    tol = Tolerance.coerce(tol)
    if not is_self_adjoint(a, tol):
        return False
    floor = tol.eps_psd * max(1.0, operator_norm(a))
    return all(eigenvalues[0] >= -floor for eigenvalues, _ in block_eigh(a) if eigenvalues.size)


def min_eigenvalue(a: AlgElement) -> float:
    """
    The smallest eigenvalue of the Hermitian part of ``a`` over all blocks.
    """
    return min(float(eigenvalues[0]) for eigenvalues, _ in block_eigh(a))


def spectral_decomposition(a: AlgElement, tol: TolLike = None) -> List[SpectralComponent]:
    """
    Decompose a self-adjoint element as ``sum(eigenvalue * projection)``.

    Eigenvalues of all blocks are sorted and clustered: consecutive eigenvalues within ``eps_eq * max(1, ||a||)`` of
    each other form one cluster whose value is their mean and whose projection is the sum of the rank-one
    eigenprojections.

    Args:
        - a (AlgElement): A self-adjoint element.
        - tol (Tolerance, optional): The tolerance.

    Returns:
        - list of SpectralComponent: The clusters in ascending order; the projections are mutually orthogonal and sum
          to the unit.

    Raises:
        - NotSelfAdjoint: If ``a`` is not self-adjoint within ``eps_eq``.
    """
    tol = Tolerance.coerce(tol)
    _require_self_adjoint(a, tol)
    gap = tol.scaled(operator_norm(a))
    entries = [
        (float(value), block, vectors[:, column])
        for block, (eigenvalues, vectors) in enumerate(block_eigh(a))
        for column, value in enumerate(eigenvalues)
    ]
    entries.sort(key=lambda entry: entry[0])

    clusters = []
    for entry in entries:
        if clusters and entry[0] - clusters[-1][-1][0] <= gap:
            clusters[-1].append(entry)
        else:
            clusters.append([entry])

    components = []
    for cluster in clusters:
        blocks = [np.zeros((n, n), dtype=complex) for n in a.algebra.block_dims]
        for _, block, vector in cluster:
            blocks[block] += np.outer(vector, vector.conj())
        value = float(np.mean([entry[0] for entry in cluster]))
        components.append(SpectralComponent(value, AlgElement(a.algebra, blocks)))
    return components


def minimal_projections(a: AlgElement, tol: TolLike = None) -> List[AlgElement]:
    """
    The rank-one eigenprojections of a self-adjoint element, one per eigenvector.

    Raises:
        - NotSelfAdjoint: If ``a`` is not self-adjoint.
    """
    tol = Tolerance.coerce(tol)
    _require_self_adjoint(a, tol)
    projections = []
    for block, (_, vectors) in enumerate(block_eigh(a)):
        for column in range(vectors.shape[1]):
            blocks = [np.zeros((n, n), dtype=complex) for n in a.algebra.block_dims]
            blocks[block] = np.outer(vectors[:, column], vectors[:, column].conj())
            projections.append(AlgElement(a.algebra, blocks))
    return projections


def apply_function(a: AlgElement, f: Callable, tol: TolLike = None) -> AlgElement:
    """
    Continuous functional calculus: apply ``f`` to the eigenvalues of a self-adjoint element.

    ``f`` is called with a numpy array of eigenvalues and must return an array of the same shape (numpy ufuncs,
    ``numpy.polynomial.Polynomial`` instances and arithmetic lambdas all qualify).

    Raises:
        - NotSelfAdjoint: If ``a`` is not self-adjoint.
    """
    tol = Tolerance.coerce(tol)
    _require_self_adjoint(a, tol)
    blocks = []
    for eigenvalues, vectors in block_eigh(a):
        values = np.broadcast_to(np.asarray(f(eigenvalues)), eigenvalues.shape)
        blocks.append((vectors * values) @ vectors.conj().T)
    return AlgElement(a.algebra, blocks)


def positive_part(a: AlgElement, tol: TolLike = None) -> AlgElement:
    return apply_function(a, lambda t: np.maximum(t, 0.0), tol)


def negative_part(a: AlgElement, tol: TolLike = None) -> AlgElement:
    """
    ``a_-`` with ``a = a_+ - a_-``; both parts are positive and orthogonal.
    """
    return apply_function(a, lambda t: np.maximum(-t, 0.0), tol)


def _rank_cutoff(a: AlgElement, tol: Tolerance) -> float:
    return tol.eps_rank * max(0.0, max(float(eigenvalues[-1]) for eigenvalues, _ in block_eigh(a)))


def support_projection(a: AlgElement, tol: TolLike = None) -> AlgElement:
    """
    The spectral projection of a positive element onto its eigenvalues above ``eps_rank * lambda_max``.

    Args:
        - a (AlgElement): A positive element.
        - tol (Tolerance, optional): The tolerance.

    Returns:
        - AlgElement: The support projection ``s`` with ``s a = a s = a``; zero for the zero element.

    Raises:
        - NotPositive: If ``a`` is not positive.
    """
    tol = Tolerance.coerce(tol)
    if not is_positive(a, tol):
        raise NotPositive()
    cutoff = _rank_cutoff(a, tol)
    return apply_function(a, lambda t: (t > cutoff).astype(float) if cutoff > 0 else np.zeros_like(t), tol)


def pseudo_inverse(a: AlgElement, tol: TolLike = None) -> AlgElement:
    """
    The inverse of a positive element on its support: eigenvalues above ``eps_rank * lambda_max`` are inverted, the
    rest are sent to zero.

    Raises:
        - NotSelfAdjoint: If ``a`` is not self-adjoint.
    """
    tol = Tolerance.coerce(tol)
    _require_self_adjoint(a, tol)
    cutoff = _rank_cutoff(a, tol)
    if cutoff <= 0:
        return a.algebra.zero()

    def invert(t: np.ndarray) -> np.ndarray:
        kept = t > cutoff
        return np.where(kept, 1.0 / np.where(kept, t, 1.0), 0.0)

    return apply_function(a, invert, tol)


def are_orthogonal(a: AlgElement, b: AlgElement, tol: TolLike = None) -> bool:
    """
    Check ``a`` and ``b`` for orthogonality: ``ab``, ``ba``, ``a*b`` and ``ab*`` all vanish.

    Args:
        - a (AlgElement): The first element.
        - b (AlgElement): The second element.
        - tol (Tolerance, optional): Products are compared with ``eps_eq * max(1, ||a|| ||b||)``.

    Returns:
        - bool: True if all four products vanish.

    Raises:
        - AlgebraMismatch: If the elements live in different algebras.
    """
    if a.algebra != b.algebra:
        raise AlgebraMismatch()
    tol = Tolerance.coerce(tol)
    threshold = tol.scaled(operator_norm(a) * operator_norm(b))
    products = (a @ b, b @ a, a.adjoint() @ b, a @ b.adjoint())
    return all(operator_norm(product) <= threshold for product in products)


def respects_orthogonality(a: AlgElement, b: AlgElement, tol: TolLike = None) -> bool:
    """
    The characterisation of ``a`` orthogonal to ``b`` through the four positive squares: ``a*a``, ``aa*`` are each
    orthogonal to ``b*b`` and ``bb*``.
    """
    tol = Tolerance.coerce(tol)
    squares_a = (a.adjoint() @ a, a @ a.adjoint())
    squares_b = (b.adjoint() @ b, b @ b.adjoint())
    return all(are_orthogonal(x, y, tol) for x in squares_a for y in squares_b)


def block_ranks(a: AlgElement, tol: TolLike = None, reference: Optional[float] = None) -> List[int]:
    """
    Per-block ranks: the number of singular values above ``eps_rank * sigma_max``.

    Args:
        - a (AlgElement): The element.
        - tol (Tolerance, optional): The tolerance.
        - reference (float, optional): The scale the cutoff is relative to; the largest singular value of ``a`` over
          all blocks by default.

    Returns:
        - list of int: One rank per block; all zero for the zero element.
    """
    tol = Tolerance.coerce(tol)
    singular_values = [np.linalg.svd(block, compute_uv=False) for block in a.blocks]
    sigma_max = max(float(values.max()) if values.size else 0.0 for values in singular_values)
    scale = sigma_max if reference is None else reference
    if scale <= 0:
        return [0] * a.algebra.num_blocks
    cutoff = tol.eps_rank * scale
    return [int(np.count_nonzero(values > cutoff)) for values in singular_values]
