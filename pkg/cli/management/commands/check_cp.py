"""
Check a map file for complete positivity.

Examples:
    python manage.py check_cp map.json
    python manage.py check_cp map.json --tol 1e-10
"""
from cli.base import BaseReportCommand
from cli.utils import load
from cp_maps.choi import choi_min_eigenvalue, require_completely_positive
from cp_maps.serializers import MapSerializer


class Command(BaseReportCommand):
    help = 'Decides complete positivity through the Choi matrix; exits with 1 when the map is not c.p.'

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Map file.')

    def run(self, report, tol, seed, **options):
        phi = load(MapSerializer, options['path'])
        report.residuals['choi_min_eigenvalue'] = choi_min_eigenvalue(phi)
        require_completely_positive(phi, tol)
