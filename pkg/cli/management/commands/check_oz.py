"""
Check a map file for the order zero property.

Examples:
    python manage.py check_oz map.json
    python manage.py check_oz map.json --witness --seed 7
"""
from django.conf import settings

from cli.base import BaseReportCommand
from cli.utils import load
from core.exceptions import NotOrderZero
from core.serializers import serialize
from cp_maps.choi import choi_min_eigenvalue, require_completely_positive
from cp_maps.serializers import MapSerializer
from order_zero.constants import DECOMPOSITION_FAILED_ERROR
from order_zero.detection import check_order_zero
from order_zero.serializers import WitnessSerializer


class Command(BaseReportCommand):
    help = 'Decides whether a completely positive map has order zero; exits with 1 when it does not.'

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Map file.')
        parser.add_argument('--witness', action='store_true',
                            help='Include a pair of orthogonal elements whose images do not multiply to zero.')

    def run(self, report, tol, seed, **options):
        phi = load(MapSerializer, options['path'])
        report.residuals['choi_min_eigenvalue'] = choi_min_eigenvalue(phi)
        require_completely_positive(phi, tol)
        check = check_order_zero(phi, tol, seed=seed, samples=settings.OZKIT['WITNESS_SAMPLES'])
        if check.report is not None:
            report.residuals.update(check.report.residuals)
        if check.scale != 1.0:
            report.residuals['scale'] = check.scale
        if not check:
            failures = ', '.join(check.report.failures)
            self.fail(report, NotOrderZero.__name__, DECOMPOSITION_FAILED_ERROR.format(failures=failures))
            if options['witness'] and check.witness is not None:
                report.witness = serialize(WitnessSerializer, check.witness)
