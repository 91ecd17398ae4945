import factory

from algebra.algebras import make_algebra
from .constants import DOMAIN_LAYOUTS
from .maps import GenSpec, fitting_multiplicities, pick_codomain


class GenSpecFactory(factory.Factory):
    """
    GenSpecFactory is a factory class for creating :class:`generators.maps.GenSpec` instances using factory_boy.

    Every field is derived from ``seed``, so ``GenSpecFactory(seed=s)`` always describes the same instance, while any
    field can be overridden and the remaining ones still fit: the multiplicities are drawn for whichever domain and
    codomain end up on the spec.
    """
    seed = factory.Sequence(lambda n: n)
    domain = factory.LazyAttribute(lambda obj: make_algebra(DOMAIN_LAYOUTS[obj.seed % len(DOMAIN_LAYOUTS)]))
    codomain = factory.LazyAttribute(lambda obj: pick_codomain(obj.domain, obj.seed))
    multiplicities = factory.LazyAttribute(lambda obj: fitting_multiplicities(obj.domain, obj.codomain, obj.seed))
    # Every fourth instance has exact zero eigenvalues in h.
    strict_h = factory.LazyAttribute(lambda obj: obj.seed % 4 != 3)

    class Meta:
        model = GenSpec

    class Params:
        #: Excludes the one-dimensional domain, on which every completely positive map has order zero.
        non_trivial = factory.Trait(
            domain=factory.LazyAttribute(
                lambda obj: make_algebra(DOMAIN_LAYOUTS[1 + obj.seed % (len(DOMAIN_LAYOUTS) - 1)])
            )
        )
