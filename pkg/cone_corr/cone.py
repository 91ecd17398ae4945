"""
The correspondence between contractive order zero maps ``A -> B`` and *-homomorphisms ``C_0((0,1]) (x) A -> B``.

A homomorphism ``rho`` from the cone is stored through its joint spectral data: the values ``t_j`` of ``rho(id (x) 1)``
on the support, their spectral projections ``p_j`` and the homomorphism ``pi`` of ``A``. Then
``rho(f (x) a) = sum_j f(t_j) p_j pi(a)``, and the order zero map of ``rho`` is ``a -> rho(id (x) a)``. Elements of the
cone's first factor are represented by polynomials without constant term, which are dense in ``C_0((0,1])``.
"""
import logging
from typing import List, Sequence, Tuple, Union

import attrs
import numpy as np
from numpy.polynomial import Polynomial

from algebra.algebras import AlgElement, FdAlgebra, sum_elements
from algebra.spectral import operator_norm, spectral_decomposition
from algebra.tolerance import Tolerance
from core.exceptions import AlgebraMismatch, InvalidFunction, InvalidRep
from cp_maps.maps import CpMap, apply
from generators.elements import ginibre
from generators.rng import derive_rng
from order_zero.constants import DEFAULT_WITNESS_SAMPLES
from order_zero.decomposition import decompose, multiply_images
from .constants import (CONSTANT_TERM_ERROR, DEFAULT_VERIFY_PAIRS, LEVEL_COMMUTATION_ERROR, LEVEL_ORDER_ERROR,
                        LEVEL_OVERLAP_ERROR, LEVEL_PROJECTION_ERROR, LEVEL_RANGE_ERROR, LEVEL_SUPPORT_ERROR,
                        MAX_MONOMIAL_DEGREE, REP_ALGEBRA_ERROR)


logger = logging.getLogger(__name__)

TolLike = Union[Tolerance, float, None]
PolynomialLike = Union[Polynomial, Sequence[float]]


@attrs.frozen(eq=False)
class ConeLevel:
    """
    One spectral value ``t`` of ``rho(id (x) 1)`` with its spectral projection ``p``.
    """
    t: float = attrs.field(converter=float)
    p: AlgElement


@attrs.frozen(eq=False)
class ConeHomRep:
    """
    A *-homomorphism ``C_0((0,1]) (x) A -> B`` as joint spectral data.

    Attributes:
        - domain (FdAlgebra): The algebra ``A``.
        - codomain (FdAlgebra): The algebra ``B``.
        - levels (tuple of ConeLevel): Increasing values in ``(0, 1]`` with mutually orthogonal projections.
        - pi (CpMap): A *-homomorphism ``A -> B`` commuting with the projections, with ``pi(1)`` their sum.
    """
    domain: FdAlgebra
    codomain: FdAlgebra
    levels: Tuple[ConeLevel, ...] = attrs.field(converter=tuple)
    pi: CpMap

    @property
    def support(self) -> AlgElement:
        """
        The sum of the level projections.
        """
        return sum_elements([level.p for level in self.levels], self.codomain)

    @property
    def pi_images(self):
        return self.pi.images

    def generator_image(self, f: PolynomialLike = None) -> AlgElement:
        """
        ``rho(f (x) 1)`` restricted to functions: ``sum_j f(t_j) p_j``; the identity function by default.
        """
        values = [level.t for level in self.levels] if f is None else _values(f, [level.t for level in self.levels])
        return sum_elements([value * level.p for value, level in zip(values, self.levels)], self.codomain)

    def validate(self, tol: TolLike = None) -> None:
        """
        Check the invariants of the representation.

        Raises:
            - InvalidRep: On the first violated invariant.
        """
        tol = Tolerance.coerce(tol)
        if self.pi.domain != self.domain or self.pi.codomain != self.codomain or any(
                level.p.algebra != self.codomain for level in self.levels):
            raise InvalidRep(REP_ALGEBRA_ERROR)
        threshold = tol.scaled(1.0)
        for index, level in enumerate(self.levels):
            if not 0.0 < level.t <= 1.0 + tol.eps_eq:
                raise InvalidRep(LEVEL_RANGE_ERROR.format(index=index, t=level.t))
            if index and level.t <= self.levels[index - 1].t:
                raise InvalidRep(LEVEL_ORDER_ERROR)
            p = level.p
            if operator_norm(p @ p - p) > threshold or operator_norm(p.adjoint() - p) > threshold:
                raise InvalidRep(LEVEL_PROJECTION_ERROR.format(index=index))
        for first in range(len(self.levels)):
            for second in range(first + 1, len(self.levels)):
                if operator_norm(self.levels[first].p @ self.levels[second].p) > threshold:
                    raise InvalidRep(LEVEL_OVERLAP_ERROR.format(first=first, second=second))
        if operator_norm(self.support - apply(self.pi, self.domain.unit())) > threshold:
            raise InvalidRep(LEVEL_SUPPORT_ERROR)
        for index, level in enumerate(self.levels):
            p = level.p.embedded()
            for tensor in self.pi.tensors:
                commutators = np.einsum('xz,pqzy->pqxy', p, tensor) - np.einsum('pqxz,zy->pqxy', tensor, p)
                if commutators.size and float(np.max(np.linalg.norm(commutators, 2, axis=(-2, -1)))) > threshold:
                    raise InvalidRep(LEVEL_COMMUTATION_ERROR.format(index=index))


def as_polynomial(f: PolynomialLike) -> Polynomial:
    """
    Coerce ``f`` to a ``Polynomial``; sequences are coefficients in increasing degree, constant term first.

    Raises:
        - InvalidFunction: If the constant term is nonzero.
    """
    polynomial = f if isinstance(f, Polynomial) else Polynomial(np.asarray(f, dtype=float))
    constant = float(polynomial.coef[0]) if polynomial.coef.size else 0.0
    if constant != 0.0:
        raise InvalidFunction(CONSTANT_TERM_ERROR.format(value=constant))
    return polynomial


def _values(f: PolynomialLike, points: List[float]) -> np.ndarray:
    return as_polynomial(f)(np.asarray(points, dtype=float))


def to_cone_hom(phi: CpMap, tol: TolLike = None, seed: int = 0,
                samples: int = DEFAULT_WITNESS_SAMPLES) -> ConeHomRep:
    """
    The cone homomorphism ``rho_phi`` of a contractive order zero map, ``rho_phi(id (x) a) = phi(a)``.

    The levels are the spectral clusters of ``h = phi(1)`` above the rank cutoff, with values clamped to at most one;
    the homomorphism is the one of :func:`order_zero.decomposition.decompose`.

    Raises:
        - NotOrderZero: If ``phi`` does not have order zero.
    """
    tol = Tolerance.coerce(tol)
    decomposition = decompose(phi, tol, seed=seed, samples=samples)
    h = decomposition.h
    cutoff = tol.eps_rank * operator_norm(h)
    levels = [
        ConeLevel(min(value, 1.0), projection)
        for value, projection in spectral_decomposition(h, tol)
        if cutoff > 0 and value > cutoff
    ]
    logger.debug('Cone representation with %d levels', len(levels))
    return ConeHomRep(phi.domain, phi.codomain, levels, decomposition.pi)


def from_cone_hom(rep: ConeHomRep, tol: TolLike = None) -> CpMap:
    """
    The order zero map ``a -> rho(id (x) a) = sum_j t_j p_j pi(a)``.

    Raises:
        - InvalidRep: If ``rep`` violates its invariants.
    """
    rep.validate(tol)
    return multiply_images(rep.generator_image(), rep.pi)


def evaluate(rep: ConeHomRep, f: PolynomialLike, a: AlgElement) -> AlgElement:
    """
    ``rho(f (x) a) = sum_j f(t_j) p_j pi(a)``.

    Args:
        - rep (ConeHomRep): The representation.
        - f (Polynomial | list of float): A polynomial with zero constant term.
        - a (AlgElement): An element of the domain.

    Raises:
        - InvalidFunction: If ``f`` has a nonzero constant term.
        - AlgebraMismatch: If ``a`` is not in the domain.
    """
    if a.algebra != rep.domain:
        raise AlgebraMismatch()
    return rep.generator_image(f) @ apply(rep.pi, a)


@attrs.frozen
class ConeHomReport:
    """
    Outcome of :func:`verify_hom`.

    Attributes:
        - multiplicativity (float): Largest ``||rho(fg (x) ab) - rho(f (x) a) rho(g (x) b)||``.
        - adjoint (float): Largest ``||rho(f (x) a)^* - rho(f (x) a^*)||``.
        - threshold (float): The accepted defect.
    """
    multiplicativity: float
    adjoint: float
    threshold: float

    @property
    def defect(self) -> float:
        return max(self.multiplicativity, self.adjoint)

    @property
    def passed(self) -> bool:
        return self.defect <= self.threshold


def _unit_element(algebra: FdAlgebra, rng: np.random.Generator) -> AlgElement:
    element = AlgElement(algebra, [ginibre(rng, n, n) for n in algebra.block_dims])
    return element * (1.0 / operator_norm(element))


def verify_hom(rep: ConeHomRep, tol: TolLike = None, seed: int = 0, pairs: int = DEFAULT_VERIFY_PAIRS) -> ConeHomReport:
    """
    Check that ``rep`` is a *-homomorphism on random elementary tensors.

    Each of the ``pairs`` draws uses monomials ``f = t^j``, ``g = t^k`` of degrees 1 to 4 and random elements ``a``,
    ``b`` of norm one.

    Returns:
        - ConeHomReport: The largest multiplicativity and adjoint defects.
    """
    tol = Tolerance.coerce(tol)
    rng = derive_rng(seed, 'cone')
    multiplicativity = adjoint = 0.0
    for _ in range(pairs):
        j, k = (int(d) for d in rng.integers(1, MAX_MONOMIAL_DEGREE + 1, size=2))
        a, b = _unit_element(rep.domain, rng), _unit_element(rep.domain, rng)
        f, g = Polynomial.basis(j), Polynomial.basis(k)
        product = evaluate(rep, f * g, a @ b)
        multiplicativity = max(multiplicativity, operator_norm(product - evaluate(rep, f, a) @ evaluate(rep, g, b)))
        adjoint = max(adjoint, operator_norm(evaluate(rep, f, a).adjoint() - evaluate(rep, f, a.adjoint())))
    return ConeHomReport(multiplicativity=multiplicativity, adjoint=adjoint, threshold=tol.scaled(1.0))
