import numpy as np
from django.test import SimpleTestCase

from algebra.algebras import make_algebra, tensor_elements
from algebra.spectral import operator_norm
from core.exceptions import AlgebraMismatch, InvalidArgument, InvalidMap
from generators.elements import random_element
from generators.maps import random_cp_map
from generators.tests import GeneratorTestCaseHelperMixin
from order_zero.detection import is_order_zero
from ..choi import map_norm
from ..maps import (CpMap, add_maps, amplify, apply, compose, identity_map, make_map, map_distance, scale_map, tensor,
                    transpose_map, zero_map)


class MakeMapTestCase(GeneratorTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for building and applying maps.
    """

    def setUp(self):
        self.algebra = make_algebra([2])

    def test_identity(self):
        e12 = self.algebra.matrix_unit(0, 0, 1)
        self.assertElementsClose(apply(identity_map(self.algebra), e12), e12)

    def test_scaled_identity_on_unit(self):
        self.assertElementsClose(apply(self.scaled_identity(0.5), self.algebra.unit()), self.diagonal(0.5, 0.5))

    def test_transpose(self):
        phi = transpose_map(self.algebra)
        self.assertElementsClose(phi(self.algebra.matrix_unit(0, 0, 1)), self.algebra.matrix_unit(0, 1, 0))

    def test_zero_map(self):
        phi = zero_map(self.algebra, make_algebra([1, 2]))
        self.assertElementsClose(apply(phi, self.diagonal(3, 4)), make_algebra([1, 2]).zero())

    def test_images_round_trip(self):
        phi = self.diagonal_embedding(0.3, 0.7)
        self.assertMapsClose(make_map(phi.domain, phi.codomain, phi.images), phi)

    def test_wrong_number_of_grids_raises_exception(self):
        with self.assertRaises(InvalidMap):
            make_map(self.algebra, self.algebra, [])

    def test_wrong_grid_shape_raises_exception(self):
        with self.assertRaises(InvalidMap):
            make_map(self.algebra, self.algebra, [[[self.algebra.unit()]]])

    def test_image_outside_codomain_raises_exception(self):
        other = make_algebra([3])
        with self.assertRaises(InvalidMap):
            make_map(self.algebra, self.algebra, [[[other.unit()] * 2] * 2])

    def test_wrong_tensor_shape_raises_exception(self):
        with self.assertRaises(InvalidMap):
            CpMap(self.algebra, self.algebra, [np.zeros((2, 2, 3, 3))])

    def test_apply_outside_domain_raises_exception(self):
        with self.assertRaises(AlgebraMismatch):
            apply(identity_map(self.algebra), make_algebra([3]).unit())

    def test_add_and_distance(self):
        half = self.scaled_identity(0.5)
        self.assertMapsClose(add_maps(half, half), identity_map(self.algebra))
        self.assertAlmostEqual(map_distance(half, identity_map(self.algebra)), 0.5)


class ComposeTestCase(GeneratorTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for composition of maps.
    """

    def test_identity_is_neutral(self):
        phi = self.diagonal_embedding(0.3, 0.7)
        self.assertMapsClose(compose(identity_map(phi.codomain), phi), phi)
        self.assertMapsClose(compose(phi, identity_map(phi.domain)), phi)

    def test_scalars_multiply(self):
        self.assertMapsClose(compose(self.scaled_identity(0.5), self.scaled_identity(1 / 3)),
                             self.scaled_identity(1 / 6))

    def test_transpose_is_an_involution(self):
        algebra = make_algebra([2, 3])
        self.assertMapsClose(compose(transpose_map(algebra), transpose_map(algebra)), identity_map(algebra))

    def test_matches_pointwise_composition(self):
        domain, middle, codomain = make_algebra([2, 1]), make_algebra([3]), make_algebra([1, 2])
        phi, psi = random_cp_map(domain, middle, seed=1), random_cp_map(middle, codomain, seed=2)
        a = random_element(domain, seed=3)
        self.assertElementsClose(apply(compose(psi, phi), a), apply(psi, apply(phi, a)))

    def test_not_chaining_raises_exception(self):
        with self.assertRaises(AlgebraMismatch):
            compose(self.scaled_identity(0.5), self.diagonal_embedding(0.3, 0.7))


class TensorTestCase(GeneratorTestCaseHelperMixin, SimpleTestCase):
    """
    Test case for tensor products and amplifications.
    """
    size = 100
    #: Domain and codomain layouts of :meth:`small_order_zero_map`, paired by index; each domain fits its codomain.
    small_domains = ([1], [2], [1, 1], [1], [2])
    small_codomains = ([2], [3], [1, 2], [3], [2, 1])

    def test_scalar_multiples_of_identity(self):
        product = tensor(self.scaled_identity(0.5), self.scaled_identity(1 / 3))
        self.assertEqual(product.domain.block_dims, (4,))
        self.assertMapsClose(product, self.scaled_identity(1 / 6, dims=[4]))

    def test_identities(self):
        first, second = make_algebra([1, 2]), make_algebra([2, 1])
        product = tensor(identity_map(first), identity_map(second))
        self.assertEqual(product.domain.block_dims, (2, 1, 4, 2))
        self.assertMapsClose(product, identity_map(product.domain))

    def test_product_of_order_zero_maps_has_order_zero(self):
        product = tensor(self.scaled_identity(0.5), self.diagonal_embedding(0.3, 0.7))
        self.assertTrue(is_order_zero(product))

    def small_order_zero_map(self, seed: int) -> CpMap:
        """
        A generated order zero map with domain and codomain of total size at most 3, so that products stay small.
        """
        return self.order_zero_map(seed, domain=make_algebra(self.small_domains[seed % len(self.small_domains)]),
                                   codomain=make_algebra(self.small_codomains[seed % len(self.small_codomains)]))

    def test_products_of_generated_order_zero_maps_have_order_zero(self):
        for seed in self.seeds(200):
            with self.subTest(seed=seed):
                product = tensor(self.small_order_zero_map(seed), self.small_order_zero_map(seed + 1))
                self.assertTrue(is_order_zero(product, seed=seed))

    def test_amplifications_of_generated_order_zero_maps_have_order_zero(self):
        for seed in self.seeds(200):
            k = 1 + seed % 3
            with self.subTest(seed=seed, k=k):
                phi = self.small_order_zero_map(seed)
                self.assertTrue(is_order_zero(amplify(phi, k), seed=seed))

    def test_elementary_tensors(self):
        for seed in self.seeds():
            with self.subTest(seed=seed):
                phi = random_cp_map(self.layout(seed), self.layout(seed + 1), seed=seed)
                psi = random_cp_map(self.layout(seed + 2), self.layout(seed + 3), seed=seed + 1)
                a, b = random_element(phi.domain, seed), random_element(psi.domain, seed + 1)
                self.assertElementsClose(apply(tensor(phi, psi), tensor_elements(a, b)),
                                         tensor_elements(apply(phi, a), apply(psi, b)), atol=1e-8 * max(
                                             1.0, operator_norm(a) * operator_norm(b)))

    def test_norm_is_multiplicative(self):
        for seed in self.seeds():
            with self.subTest(seed=seed):
                phi = scale_map(random_cp_map(self.layout(seed), self.layout(seed + 1), seed=seed), 0.5)
                psi = scale_map(random_cp_map(self.layout(seed + 2), self.layout(seed + 4), seed=seed + 1), 0.3)
                self.assertAlmostEqual(map_norm(tensor(phi, psi)), 0.15, places=8)

    def test_amplify_identity(self):
        self.assertMapsClose(amplify(identity_map(make_algebra([2])), 2), identity_map(make_algebra([4])))

    def test_amplify_once_is_identity(self):
        phi = self.diagonal_embedding(0.3, 0.7)
        self.assertMapsClose(amplify(phi, 1), phi)

    def test_amplify_scaled_identity(self):
        self.assertMapsClose(amplify(self.scaled_identity(0.5), 3), self.scaled_identity(0.5, dims=[6]))

    def test_amplify_invalid_level_raises_exception(self):
        for k in (0, -1, 1.5, True):
            with self.subTest(k=k), self.assertRaises(InvalidArgument):
                amplify(self.scaled_identity(0.5), k)
