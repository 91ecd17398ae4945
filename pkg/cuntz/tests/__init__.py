"""
Test helpers for Cuntz comparison.

- `CuntzTestCaseHelperMixin`: Positive elements whose nonzero spectrum lies in ``[1, 2]``, so that their ranks survive
  multiplication by the ``h`` of a generated order zero map without approaching the rank cutoff.
"""
from typing import Sequence

from algebra.algebras import AlgElement, FdAlgebra
from algebra.spectral import support_projection
from generators.elements import random_positive
from generators.tests import GeneratorTestCaseHelperMixin


class CuntzTestCaseHelperMixin(GeneratorTestCaseHelperMixin):

    @staticmethod
    def flat_positive(algebra: FdAlgebra, seed: int, ranks: Sequence[int] = None) -> AlgElement:
        p = random_positive(algebra, ranks=ranks, seed=seed)
        return support_projection(p) + p
