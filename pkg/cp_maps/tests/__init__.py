"""
Test helpers for completely positive maps.

- `MapTestCaseHelperMixin`: Builds the small maps the suites keep coming back to (scaled identities, diagonal
  embeddings of ``C^2``, compressions by a matrix) and asserts that two maps agree on every matrix unit.

Usage Guidelines:
- Combine with the mixins of ``algebra.tests``; this one extends `ElementTestCaseHelperMixin`.
"""
from typing import Sequence

import numpy as np

from algebra.algebras import AlgElement, make_algebra
from algebra.tests import ElementTestCaseHelperMixin
from ..maps import CpMap, identity_map, make_map, map_distance, scale_map


class MapTestCaseHelperMixin(ElementTestCaseHelperMixin):
    """
    A mixin with constructors and assertions for :class:`cp_maps.maps.CpMap` instances.
    """

    @staticmethod
    def scaled_identity(scalar: float, dims: Sequence[int] = (2,)) -> CpMap:
        return scale_map(identity_map(make_algebra(dims)), scalar)

    @staticmethod
    def diagonal_embedding(*weights: float) -> CpMap:
        """
        The map ``C^k -> M_{k+1}``, ``(x_1, ..., x_k) -> diag(w_1 x_1, ..., w_k x_k, 0)``.
        """
        k = len(weights)
        domain, codomain = make_algebra([1] * k), make_algebra([k + 1])
        images = []
        for i, weight in enumerate(weights):
            block = np.zeros((k + 1, k + 1))
            block[i, i] = weight
            images.append([[AlgElement(codomain, [block])]])
        return make_map(domain, codomain, images)

    @staticmethod
    def compression(v) -> CpMap:
        """
        The map ``M_n -> M_n``, ``a -> v a v^*``.
        """
        v = np.asarray(v, dtype=complex)
        algebra = make_algebra([v.shape[0]])
        n = v.shape[0]
        return make_map(algebra, algebra, [[
            [AlgElement(algebra, [v @ algebra.matrix_unit(0, p, q).blocks[0] @ v.conj().T]) for q in range(n)]
            for p in range(n)
        ]])

    def assertMapsClose(self, first: CpMap, second: CpMap, atol: float = None, msg: str = None):
        """
        Asserts that two maps share their algebras and agree entrywise on every matrix unit within ``atol``.
        """
        atol = self.atol if atol is None else atol
        self.assertEqual((first.domain, first.codomain), (second.domain, second.codomain), msg)
        distance = map_distance(first, second)
        self.assertLessEqual(distance, atol, msg or f'Maps differ by {distance:.3e}.')
