"""
Test helpers for numerical assertions on algebra elements.

These mixins are shared by the test suites of every app:

- `ElementTestCaseHelperMixin`: Builds elements from plain nested lists and asserts closeness, positivity and
  orthogonality with the tolerances the library itself uses.
- `SeededTestCaseHelperMixin`: Yields the per-instance seeds of a property suite; the ``size`` class attribute sets how
  many instances a suite draws.

Usage Guidelines:
- Mix the helpers into ``django.test.SimpleTestCase`` subclasses; none of the suites touch a database.
- Keep seeds derived from ``seed_base`` so that a failing instance can be reproduced from its index.
"""
from typing import Iterator, Sequence

import numpy as np

from ..algebras import AlgElement, FdAlgebra, make_algebra
from ..spectral import are_orthogonal, is_positive, min_eigenvalue, operator_norm


class ElementTestCaseHelperMixin:
    """
    A mixin with constructors and assertions for :class:`algebra.algebras.AlgElement` instances.
    """
    #: Default absolute tolerance of the closeness assertions.
    atol: float = 1e-8

    @staticmethod
    def element(*blocks: Sequence, dims: Sequence[int] = None) -> AlgElement:
        """
        Build an element from nested lists, one per block.

        Args:
            - *blocks: The blocks, e.g. ``element([[1, 0], [0, 0]], [[2]])``.
            - dims (list of int, optional): The algebra; inferred from the block shapes if omitted.

        Returns:
            - AlgElement: The element.
        """
        arrays = [np.atleast_2d(np.array(block, dtype=complex)) for block in blocks]
        algebra = make_algebra(dims or [array.shape[0] for array in arrays])
        return AlgElement(algebra, arrays)

    @staticmethod
    def diagonal(*values, dims: Sequence[int] = None) -> AlgElement:
        """
        A diagonal element of ``M_n`` (or of ``dims``) with the given diagonal.
        """
        algebra = make_algebra(dims or [len(values)])
        blocks, start = [], 0
        for n in algebra.block_dims:
            blocks.append(np.diag(values[start:start + n]))
            start += n
        return AlgElement(algebra, blocks)

    def assertElementsClose(self, first: AlgElement, second: AlgElement, atol: float = None, msg: str = None):
        """
        Asserts that two elements live in the same algebra and agree blockwise within ``atol``.
        """
        atol = self.atol if atol is None else atol
        # Compare the algebras first, so that shape errors do not surface as numpy exceptions.
        self.assertEqual(first.algebra, second.algebra, msg)
        difference = operator_norm(first - second)
        self.assertLessEqual(difference, atol, msg or f'Elements differ by {difference:.3e} in norm.')

    def assertMatrixClose(self, first, second, atol: float = None, msg: str = None):
        atol = self.atol if atol is None else atol
        first, second = np.asarray(first), np.asarray(second)
        self.assertEqual(first.shape, second.shape, msg)
        self.assertTrue(np.allclose(first, second, rtol=0.0, atol=atol), msg or f'{first} != {second}')

    def assertPositive(self, element: AlgElement, tol=None, msg: str = None):
        self.assertTrue(
            is_positive(element, tol),
            msg or f'Element is not positive, smallest eigenvalue {min_eigenvalue(element):.3e}.'
        )

    def assertOrthogonal(self, first: AlgElement, second: AlgElement, tol=None, msg: str = None):
        self.assertTrue(are_orthogonal(first, second, tol), msg or 'Elements are not orthogonal.')


class SeededTestCaseHelperMixin:
    """
    A mixin driving seeded property suites.
    """
    #: Number of instances drawn by a property suite.
    size: int = 50
    #: Offset of the per-instance seeds; change it to draw a disjoint batch.
    seed_base: int = 0

    def seeds(self, size: int = None) -> Iterator[int]:
        """
        Yields the seeds of the suite, one per instance.

        Args:
            - size (int, optional): Overrides the class attribute ``size``.
        """
        return iter(range(self.seed_base, self.seed_base + (self.size if size is None else size)))

    #: Block layouts the property suites cycle through.
    layouts = ([1], [2], [1, 1], [2, 3], [3, 3], [2, 1], [3])

    def layout(self, seed: int) -> FdAlgebra:
        return make_algebra(self.layouts[seed % len(self.layouts)])
