"""
Apply a polynomial to an order zero map: ``f(phi) = f(h) pi``.

``--poly c1,c2,...`` stands for ``f(t) = c1 t + c2 t^2 + ...``; there is no constant term.

Examples:
    python manage.py fcalc map.json --poly 0,1 -o squared.json
"""
from django.conf import settings
from numpy.polynomial import Polynomial

from cli.base import BaseReportCommand
from cli.utils import load, parse_numbers
from core.serializers import serialize
from cp_maps.serializers import MapSerializer
from order_zero.calculus import functional_calculus


class Command(BaseReportCommand):
    help = 'Writes the order zero map f(phi) for a polynomial f vanishing at 0.'
    produces_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Map file of a contractive order zero map.')
        parser.add_argument('--poly', required=True, help='Coefficients c1,c2,... of f(t) = c1 t + c2 t^2 + ...')

    def run(self, report, tol, seed, **options):
        phi = load(MapSerializer, options['path'])
        f = Polynomial([0.0, *parse_numbers(options['poly'])])
        return serialize(MapSerializer, functional_calculus(phi, f, tol, seed=seed,
                                                             samples=settings.OZKIT['WITNESS_SAMPLES']))
