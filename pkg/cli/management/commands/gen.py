"""
Generate a seeded map: a *-homomorphism, an order zero map or a generic completely positive map.

Fields that are not given are drawn from the seed, so ``gen --kind oz --seed 42`` alone describes an instance.

Examples:
    python manage.py gen --kind oz --seed 42 -o map.json
    python manage.py gen --kind hom --domain 1,1 --codomain 3 --mult 1,1
    python manage.py gen --kind cp --domain 2 --codomain 2,2 --kraus 3
"""
import argparse

from algebra.algebras import make_algebra
from cli.base import BaseReportCommand
from cli.constants import MULTIPLICITIES_LAYOUT_ERROR
from cli.utils import parse_integers, parse_multiplicities
from core.exceptions import InvalidArgument
from core.serializers import serialize
from cp_maps.serializers import MapSerializer
from generators.enums import GenKind
from generators.factories import GenSpecFactory
from generators.maps import random_cp_map, random_hom, random_order_zero


class Command(BaseReportCommand):
    help = 'Writes a seeded random map; the same flags always give the same file.'
    produces_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('--kind', choices=GenKind.values, default=GenKind.OZ, help='Map family.')
        parser.add_argument('--domain', help='Domain block sizes, e.g. 2,3.')
        parser.add_argument('--codomain', help='Codomain block sizes, e.g. 4,5.')
        parser.add_argument('--mult', help='Multiplicities, one row per codomain block, e.g. "1,0;0,1".')
        parser.add_argument('--strict-h', action=argparse.BooleanOptionalAction, default=None,
                            help='Keep h strictly positive on the support of pi.')
        parser.add_argument('--kraus', type=int, default=2, help='Kraus operators per block of a cp map.')

    def run(self, report, tol, seed, **options):
        overrides = {}
        if options['domain']:
            overrides['domain'] = make_algebra(parse_integers(options['domain']))
        if options['codomain']:
            overrides['codomain'] = make_algebra(parse_integers(options['codomain']))
        if options['mult']:
            if len(overrides) != 2:
                raise InvalidArgument(MULTIPLICITIES_LAYOUT_ERROR)
            overrides['multiplicities'] = parse_multiplicities(options['mult'])
        if options['strict_h'] is not None:
            overrides['strict_h'] = options['strict_h']
        spec = GenSpecFactory(seed=seed, **overrides)

        kind = GenKind(options['kind'])
        if kind == GenKind.HOM:
            phi = random_hom(spec)
        elif kind == GenKind.OZ:
            phi = random_order_zero(spec)
        else:
            phi = random_cp_map(spec.domain, spec.codomain, options['kraus'], seed=seed)
        return serialize(MapSerializer, phi)
