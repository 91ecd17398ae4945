"""
Amplify a map to matrices: ``phi^(k)([a_rs]) = [phi(a_rs)]``.

Examples:
    python manage.py amplify map.json -k 2 -o amplified.json
"""
from cli.base import BaseReportCommand
from cli.utils import load
from core.serializers import serialize
from cp_maps.choi import choi_min_eigenvalue
from cp_maps.maps import amplify
from cp_maps.serializers import MapSerializer


class Command(BaseReportCommand):
    help = 'Writes the amplification of a map to k x k matrices.'
    produces_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Map file.')
        parser.add_argument('-k', type=int, required=True, help='Matrix size.')

    def run(self, report, tol, seed, **options):
        amplified = amplify(load(MapSerializer, options['path']), options['k'])
        report.residuals['choi_min_eigenvalue'] = choi_min_eigenvalue(amplified)
        return serialize(MapSerializer, amplified)
