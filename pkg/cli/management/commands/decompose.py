"""
Compute the decomposition ``phi = h pi`` of a contractive order zero map.

Examples:
    python manage.py decompose map.json -o decomposition.json
"""
from django.conf import settings

from cli.base import BaseReportCommand
from cli.utils import load
from core.serializers import serialize
from cp_maps.serializers import MapSerializer
from order_zero.decomposition import decompose
from order_zero.serializers import DecompositionSerializer


class Command(BaseReportCommand):
    help = 'Writes h = phi(1) and the supporting *-homomorphism pi of an order zero map.'
    produces_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Map file of a contractive order zero map.')

    def run(self, report, tol, seed, **options):
        phi = load(MapSerializer, options['path'])
        decomposition = decompose(phi, tol, seed=seed, samples=settings.OZKIT['WITNESS_SAMPLES'])
        report.residuals.update(decomposition.report.residuals)
        return serialize(DecompositionSerializer, decomposition)
