"""
Tensor two maps: ``(phi (x) psi)(a (x) b) = phi(a) (x) psi(b)``.

Examples:
    python manage.py tensor phi.json psi.json -o product.json
"""
from cli.base import BaseReportCommand
from cli.utils import load
from core.serializers import serialize
from cp_maps.choi import choi_min_eigenvalue
from cp_maps.maps import tensor
from cp_maps.serializers import MapSerializer


class Command(BaseReportCommand):
    help = 'Writes the tensor product of two maps.'
    produces_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('first', help='Map file of phi.')
        parser.add_argument('second', help='Map file of psi.')

    def run(self, report, tol, seed, **options):
        product = tensor(load(MapSerializer, options['first']), load(MapSerializer, options['second']))
        report.residuals['choi_min_eigenvalue'] = choi_min_eigenvalue(product)
        return serialize(MapSerializer, product)
