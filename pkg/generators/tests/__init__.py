"""
Test helpers drawing seeded instances from the generators.

- `GeneratorTestCaseHelperMixin`: Specs, order zero maps and perturbed maps indexed by seed, on top of the seeded and
  map helpers of the other apps.
"""
from algebra.tests import SeededTestCaseHelperMixin
from cp_maps.maps import CpMap
from cp_maps.tests import MapTestCaseHelperMixin
from ..factories import GenSpecFactory
from ..maps import GenSpec, perturb, random_order_zero


class GeneratorTestCaseHelperMixin(MapTestCaseHelperMixin, SeededTestCaseHelperMixin):
    """
    A mixin with seeded generator instances.
    """
    #: Size of the perturbation used for the negative instances.
    perturbation: float = 0.05

    @staticmethod
    def spec(seed: int, **kwargs) -> GenSpec:
        return GenSpecFactory(seed=seed, **kwargs)

    def order_zero_map(self, seed: int, **kwargs) -> CpMap:
        """
        The generated order zero map of instance ``seed``; keyword arguments override spec fields.
        """
        return random_order_zero(self.spec(seed, **kwargs))

    def perturbed_map(self, seed: int) -> CpMap:
        """
        A negative instance: a generated order zero map on a domain other than ``C``, perturbed by a random completely
        positive map.
        """
        return perturb(self.order_zero_map(seed, non_trivial=True), self.perturbation, seed=seed)
