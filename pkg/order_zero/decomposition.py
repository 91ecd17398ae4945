"""
The structure decomposition ``phi = h pi`` of a completely positive contractive order zero map.

For ``phi: A -> B`` with ``A`` unital, ``h = phi(1)`` and the supporting homomorphism is ``pi(a) = h^+ phi(a)``, where
``h^+`` inverts ``h`` on its support ``s``. This is the finite-dimensional value of the strong limit of
``(h + 1/n)^{-1} phi(a)``. The decomposition is accepted only after every identity it must satisfy has been checked
numerically (:func:`verify_decomposition`).
"""
import logging
from typing import Dict, List, Union

import attrs
import numpy as np

from algebra.algebras import AlgElement
from algebra.spectral import apply_function, operator_norm, positive_part, pseudo_inverse, support_projection
from algebra.tolerance import Tolerance
from core.exceptions import AlgebraMismatch, NotContractive, NotOrderZero
from cp_maps.choi import require_completely_positive, unit_image
from cp_maps.maps import CpMap, apply
from .constants import (ADJOINT, COMMUTATOR, DECOMPOSITION_FAILED_ERROR, DEFAULT_WITNESS_SAMPLES, MULTIPLICATIVITY,
                        NORM, NOT_CONTRACTIVE_ERROR, RECONSTRUCTION, RESIDUALS, SUPPORT)
from .witness import find_witness


logger = logging.getLogger(__name__)

TolLike = Union[Tolerance, float, None]


@attrs.frozen(eq=False)
class DecompositionReport:
    """
    Residuals of the decomposition identities.

    Attributes:
        - residuals (dict): Residual name to value, in the order of ``order_zero.constants.RESIDUALS``.
        - threshold (float): The largest accepted residual.
        - cutoff (float): Added to the threshold of ``reconstruction``: eigenvalues of ``h`` at or below the rank
          cutoff are not inverted, so ``h pi`` may miss that much of ``phi``.
    """
    residuals: Dict[str, float]
    threshold: float
    cutoff: float = 0.0

    def limit(self, name: str) -> float:
        return self.threshold + self.cutoff if name == RECONSTRUCTION else self.threshold

    @property
    def failures(self) -> List[str]:
        return [name for name, value in self.residuals.items() if not value <= self.limit(name)]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())


@attrs.frozen(eq=False)
class OrderZeroDecomposition:
    """
    The triple ``(h, pi, s)`` with ``phi = h pi``.

    Attributes:
        - h (AlgElement): ``phi(1)``, positive, commuting with the image of ``pi``.
        - pi (CpMap): The supporting *-homomorphism, landing in the corner ``s B s``.
        - s (AlgElement): The support projection of ``h``; equal to ``pi(1)``.
        - report (DecompositionReport): The residuals found when the decomposition was verified.
    """
    h: AlgElement
    pi: CpMap
    s: AlgElement
    report: DecompositionReport = None

    @property
    def pi_images(self):
        return self.pi.images

    def reconstruct(self) -> CpMap:
        """
        The map ``a -> h pi(a)``.
        """
        return multiply_images(self.h, self.pi)


def multiply_images(x: AlgElement, phi: CpMap) -> CpMap:
    """
    The map ``a -> x phi(a)`` for an element ``x`` of the codomain.
    """
    if x.algebra != phi.codomain:
        raise AlgebraMismatch()
    left = x.embedded()
    return CpMap(phi.domain, phi.codomain, [np.einsum('xz,pqzy->pqxy', left, t) for t in phi.tensors])


def _norms(stack: np.ndarray) -> float:
    """
    Largest operator norm in a stack of matrices.
    """
    if not stack.size:
        return 0.0
    return float(np.max(np.linalg.norm(stack, 2, axis=(-2, -1))))


def _multiplicativity_defect(pi: CpMap) -> float:
    """
    Defect of the relations ``pi(e_p1) pi(e_1q) = pi(e_pq)`` and ``pi(e_1p) pi(e_q1) = delta_pq pi(e_11)`` in every
    block, and of ``pi(1_i) pi(1_j) = 0`` across blocks; together they generate all matrix-unit relations.
    """
    defect = 0.0
    units = []
    for tensor in pi.tensors:
        n = tensor.shape[0]
        column, row = tensor[:, 0], tensor[0, :]
        products = np.einsum('pxz,qzy->pqxy', column, row)
        defect = max(defect, _norms(products - tensor))
        inner = np.einsum('pxz,qzy->pqxy', row, column)
        expected = np.einsum('pq,xy->pqxy', np.eye(n), tensor[0, 0])
        defect = max(defect, _norms(inner - expected))
        units.append(np.einsum('ppxy->xy', tensor))
    for i in range(len(units)):
        for j in range(i + 1, len(units)):
            defect = max(defect, _norms((units[i] @ units[j])[None]))
    return defect


def verify_decomposition(phi: CpMap, decomposition: OrderZeroDecomposition, tol: TolLike = None) -> DecompositionReport:
    """
    Measure how well ``(h, pi, s)`` realizes ``phi``.

    Args:
        - phi (CpMap): The map.
        - decomposition (OrderZeroDecomposition): The candidate decomposition.
        - tol (Tolerance, optional): The residuals are compared with ``eps_eq * max(1, ||phi(1)||)``; the
          reconstruction residual may exceed that by the rank cutoff ``eps_rank * ||h||``.

    Returns:
        - DecompositionReport: The residuals ``reconstruction``, ``multiplicativity``, ``adjoint``, ``commutator``,
          ``support`` and ``norm``.

    Raises:
        - AlgebraMismatch: If the decomposition does not fit ``phi``.
    """
    tol = Tolerance.coerce(tol)
    pi, h = decomposition.pi, decomposition.h
    if pi.domain != phi.domain or pi.codomain != phi.codomain or h.algebra != phi.codomain:
        raise AlgebraMismatch()
    h_matrix = h.embedded()
    phi_norm = operator_norm(unit_image(phi))

    reconstruction = commutator = adjoint = 0.0
    for tensor, target in zip(pi.tensors, phi.tensors):
        left = np.einsum('xz,pqzy->pqxy', h_matrix, tensor)
        right = np.einsum('pqxz,zy->pqxy', tensor, h_matrix)
        reconstruction = max(reconstruction, _norms(left - target))
        commutator = max(commutator, _norms(left - right))
        adjoint = max(adjoint, _norms(tensor - tensor.transpose(1, 0, 3, 2).conj()))

    residuals = dict(zip(RESIDUALS, (
        reconstruction,
        _multiplicativity_defect(pi),
        adjoint,
        commutator,
        operator_norm(apply(pi, pi.domain.unit()) - decomposition.s),
        abs(operator_norm(h) - phi_norm),
    )))
    return DecompositionReport(residuals={k: float(v) for k, v in residuals.items()},
                               threshold=tol.scaled(phi_norm), cutoff=tol.eps_rank * operator_norm(h))


def decompose(phi: CpMap, tol: TolLike = None, seed: int = 0,
              samples: int = DEFAULT_WITNESS_SAMPLES) -> OrderZeroDecomposition:
    """
    Compute and verify the decomposition ``phi = h pi`` of a contractive completely positive order zero map.

    Args:
        - phi (CpMap): The map.
        - tol (Tolerance, optional): The tolerance.
        - seed (int): Seed of the witness search run when verification fails.
        - samples (int): Budget of the witness search.

    Returns:
        - OrderZeroDecomposition: ``h = phi(1)``, ``s`` its support projection and ``pi = h^+ phi``, with the residual
          report attached.

    Raises:
        - NotCompletelyPositive: If ``phi`` fails the Choi test.
        - NotContractive: If ``||phi|| > 1 + eps_eq``.
        - NotOrderZero: If a residual exceeds the tolerance; carries the report and, when the search finds one, a
          witness pair.
    """
    tol = Tolerance.coerce(tol)
    require_completely_positive(phi, tol)
    h = unit_image(phi)
    norm = operator_norm(h)
    if norm > 1.0 + tol.eps_eq:
        raise NotContractive(NOT_CONTRACTIVE_ERROR.format(norm=norm))

    s = support_projection(positive_part(h, tol), tol)
    pi = multiply_images(pseudo_inverse(h, tol), phi)
    decomposition = OrderZeroDecomposition(h=h, pi=pi, s=s)
    report = verify_decomposition(phi, decomposition, tol)
    logger.debug('Decomposition residuals %s (threshold %.3e)', report.residuals, report.threshold)
    if not report.passed:
        witness = find_witness(phi, tol, seed=seed, samples=samples)
        raise NotOrderZero(
            DECOMPOSITION_FAILED_ERROR.format(failures=', '.join(report.failures)), witness=witness, report=report
        )
    return attrs.evolve(decomposition, report=report)


def square_root_factorization(decomposition: OrderZeroDecomposition, tol: TolLike = None) -> AlgElement:
    """
    The element ``h^{1/2}``, for which ``phi(a) = h^{1/2} pi(a) h^{1/2}``.
    """
    return apply_function(decomposition.h, lambda t: np.sqrt(np.maximum(t, 0.0)), tol)
