"""
The morphism of Cuntz classes induced by an order zero map.

Examples:
    python manage.py cuntz_map map.json
"""
from django.conf import settings

from cli.base import BaseReportCommand
from cli.utils import load
from core.serializers import serialize
from cp_maps.serializers import MapSerializer
from cuntz.comparison import induced_morphism
from cuntz.serializers import CuntzMorphismSerializer


class Command(BaseReportCommand):
    help = 'Writes the matrix T with <phi(a)> = T <a> on rank vectors.'
    produces_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Map file of an order zero map.')

    def run(self, report, tol, seed, **options):
        phi = load(MapSerializer, options['path'])
        morphism = induced_morphism(phi, tol, seed=seed, samples=settings.OZKIT['WITNESS_SAMPLES'])
        return serialize(CuntzMorphismSerializer, morphism)
