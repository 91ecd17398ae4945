"""
Compose a trace on the codomain with a map and decide whether the result is a trace.

Examples:
    python manage.py trace_compose map.json --weights 1,0.5
"""
from cli.base import BaseReportCommand
from cli.utils import load, parse_numbers
from core.serializers import deserialize, serialize
from cp_maps.serializers import MapSerializer
from traces.constants import NOT_TRACIAL_ERROR
from traces.functionals import check_tracial, compose_with_map
from traces.serializers import FunctionalSerializer, TracialCheckSerializer, TraceSerializer


class Command(BaseReportCommand):
    help = 'Writes tau o phi and exits with 1 when it is not a positive tracial functional.'
    produces_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Map file.')
        parser.add_argument('--weights', required=True, help='Block weights w_1,w_2,... of tau on the codomain.')

    def run(self, report, tol, seed, **options):
        phi = load(MapSerializer, options['path'])
        tau = deserialize(TraceSerializer, {'weights': parse_numbers(options['weights'])}, algebra=phi.codomain)
        functional = compose_with_map(tau, phi)
        check = check_tracial(functional, tol)
        report.residuals['tracial_defect'] = check.defect
        if not check.positive:
            self.fail(report, 'NotTracial', NOT_TRACIAL_ERROR.format(defect=check.defect))
        return {
            'functional': serialize(FunctionalSerializer, functional),
            'check': serialize(TracialCheckSerializer, check),
        }
