"""
Cuntz classes of positive elements and, for two elements, an explicit subequivalence witness.

Examples:
    python manage.py cuntz a.json
    python manage.py cuntz a.json b.json --delta 1e-4 --cutdown
"""
from algebra.serializers import ElementSerializer
from cli.base import BaseReportCommand
from cli.utils import load
from core.serializers import serialize
from cuntz.comparison import construct_witness, cuntz_class
from cuntz.constants import DEFAULT_DELTA
from cuntz.serializers import CuntzClassSerializer, CuntzWitnessSerializer


class Command(BaseReportCommand):
    help = 'Writes the rank vector of a positive element; with a second element, decides a <= b and builds x with ' \
           'x* b x close to a.'

    def add_command_arguments(self, parser):
        parser.add_argument('first', help='Element file of a.')
        parser.add_argument('second', nargs='?', help='Element file of b.')
        parser.add_argument('-k', type=int, default=1, help='Read the elements as members of M_k(A).')
        parser.add_argument('--delta', type=float, default=DEFAULT_DELTA, help='Spectral cut of the witness.')
        parser.add_argument('--cutdown', action='store_true', help='Realize (a - delta)_+ instead of a.')

    def run(self, report, tol, seed, **options):
        a = load(ElementSerializer, options['first'])
        result = {'first': serialize(CuntzClassSerializer, cuntz_class(a, options['k'], tol))}
        if options['second'] is None:
            return result
        b = load(ElementSerializer, options['second'])
        result['second'] = serialize(CuntzClassSerializer, cuntz_class(b, options['k'], tol))
        witness = construct_witness(a, b, options['delta'], tol, cutdown=options['cutdown'])
        report.residuals['witness'] = witness.residual
        report.witness = serialize(CuntzWitnessSerializer, witness)
        return result
