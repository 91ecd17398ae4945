import numpy as np
from django.test import SimpleTestCase

from algebra.algebras import AlgElement, make_algebra
from algebra.spectral import operator_norm
from core.exceptions import NotCompletelyPositive
from generators.elements import random_element
from generators.maps import random_cp_map
from generators.tests import GeneratorTestCaseHelperMixin
from ..choi import (choi_blocks, from_kraus, is_completely_positive, is_contractive, kraus, map_norm,
                    rescale_contractive, schwarz_defect)
from ..maps import identity_map, make_map, transpose_map, zero_map


class ChoiTestCase(GeneratorTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for Choi matrices and the complete positivity test.
    """

    def setUp(self):
        self.algebra = make_algebra([2])
        half = AlgElement(self.algebra, [np.eye(2) / 2])
        zero = self.algebra.zero()
        # a -> Tr(a) I / 2
        self.depolarizing = make_map(self.algebra, self.algebra, [[[half, zero], [zero, half]]])

    def test_identity_spectrum(self):
        (c,) = choi_blocks(identity_map(self.algebra))
        self.assertMatrixClose(np.linalg.eigvalsh(c), [0, 0, 0, 2])

    def test_transpose_spectrum(self):
        (c,) = choi_blocks(transpose_map(self.algebra))
        self.assertMatrixClose(np.linalg.eigvalsh(c), [-1, 1, 1, 1])

    def test_zero_map(self):
        (c,) = choi_blocks(zero_map(self.algebra, self.algebra))
        self.assertMatrixClose(c, np.zeros((4, 4)))

    def test_depolarizing_choi(self):
        (c,) = choi_blocks(self.depolarizing)
        self.assertMatrixClose(c, np.eye(4) / 2)

    def test_complete_positivity(self):
        self.assertTrue(is_completely_positive(identity_map(self.algebra)))
        self.assertTrue(is_completely_positive(self.depolarizing))
        self.assertFalse(is_completely_positive(transpose_map(self.algebra)))

    def test_blocks_of_commutative_domains_are_positive(self):
        self.assertTrue(is_completely_positive(transpose_map(make_algebra([1, 1, 1]))))

    def test_random_kraus_maps_are_completely_positive(self):
        for seed in self.seeds(200):
            with self.subTest(seed=seed):
                self.assertTrue(is_completely_positive(random_cp_map(self.layout(seed), self.layout(seed + 1),
                                                                     seed=seed)))


class KrausTestCase(GeneratorTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for Kraus decompositions.
    """

    def setUp(self):
        self.algebra = make_algebra([2])

    def test_identity(self):
        decomposition = kraus(identity_map(self.algebra))
        self.assertEqual(decomposition.count, 1)
        (operator,) = decomposition.operators[0]
        self.assertMatrixClose(operator / operator[0, 0], np.eye(2))
        self.assertAlmostEqual(abs(operator[0, 0]), 1.0)

    def test_half_identity(self):
        (operator,) = kraus(self.scaled_identity(0.5)).operators[0]
        self.assertAlmostEqual(abs(operator[0, 0]), np.sqrt(0.5))
        self.assertMatrixClose(operator / operator[0, 0], np.eye(2))

    def test_depolarizing(self):
        half = AlgElement(self.algebra, [np.eye(2) / 2])
        zero = self.algebra.zero()
        phi = make_map(self.algebra, self.algebra, [[[half, zero], [zero, half]]])
        decomposition = kraus(phi)
        self.assertEqual(decomposition.count, 4)
        self.assertMapsClose(decomposition.reconstruct(), phi)

    def test_not_completely_positive_raises_exception(self):
        with self.assertRaises(NotCompletelyPositive):
            kraus(transpose_map(self.algebra))

    def test_reconstruction(self):
        for seed in self.seeds(300):
            with self.subTest(seed=seed):
                phi = random_cp_map(self.layout(seed), self.layout(seed + 2), seed=seed)
                self.assertMapsClose(kraus(phi).reconstruct(), phi)

    def test_from_kraus_drops_off_diagonal_blocks(self):
        domain, codomain = make_algebra([1]), make_algebra([1, 1])
        phi = from_kraus(domain, codomain, [[np.ones((2, 1))]])
        self.assertElementsClose(phi(domain.unit()), self.element([[1]], [[1]]))


class NormTestCase(GeneratorTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for norms, rescaling and the Schwarz inequality.
    """

    def test_norms(self):
        self.assertAlmostEqual(map_norm(identity_map(make_algebra([2]))), 1.0)
        self.assertAlmostEqual(map_norm(self.scaled_identity(0.5)), 0.5)
        self.assertAlmostEqual(map_norm(self.diagonal_embedding(0.3, 0.7)), 0.7)

    def test_norm_of_non_completely_positive_map_raises_exception(self):
        with self.assertRaises(NotCompletelyPositive):
            map_norm(transpose_map(make_algebra([2])))

    def test_rescale_contractive(self):
        self.assertFalse(is_contractive(self.scaled_identity(3.0)))
        self.assertMapsClose(rescale_contractive(self.scaled_identity(3.0)), self.scaled_identity(1.0))
        phi = self.scaled_identity(0.5)
        self.assertIs(rescale_contractive(phi), phi)

    def test_schwarz_inequality(self):
        for seed in self.seeds(200):
            with self.subTest(seed=seed):
                phi = random_cp_map(self.layout(seed), self.layout(seed + 3), seed=seed)
                a = random_element(phi.domain, seed)
                self.assertGreaterEqual(schwarz_defect(phi, a), -1e-8 * max(1.0, operator_norm(a) ** 2))

    def test_schwarz_defect_of_transpose_is_negative(self):
        algebra = make_algebra([2])
        self.assertLess(schwarz_defect(transpose_map(algebra), algebra.matrix_unit(0, 0, 1)), -0.5)
