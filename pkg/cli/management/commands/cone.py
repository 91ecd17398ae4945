"""
Pass an order zero map through the cone correspondence and back.

Examples:
    python manage.py cone map.json -o rep.json
    python manage.py cone rep.json --from-rep -o map.json
"""
from django.conf import settings

from cli.base import BaseReportCommand
from cli.utils import load
from cone_corr.cone import from_cone_hom, to_cone_hom, verify_hom
from cone_corr.serializers import ConeHomRepSerializer
from core.exceptions import InvalidRep
from core.serializers import serialize
from cp_maps.maps import map_distance
from cp_maps.serializers import MapSerializer


class Command(BaseReportCommand):
    help = 'Writes the cone homomorphism of a contractive order zero map, checking the round trip and the ' \
           'homomorphism identities; with --from-rep, writes the order zero map of a representation.'
    produces_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Map file, or representation file with --from-rep.')
        parser.add_argument('--from-rep', action='store_true', help='Read a representation and write its map.')

    def run(self, report, tol, seed, **options):
        if options['from_rep']:
            rep = load(ConeHomRepSerializer, options['path'])
            self.record(report, rep, tol, seed)
            return serialize(MapSerializer, from_cone_hom(rep, tol))

        phi = load(MapSerializer, options['path'])
        rep = to_cone_hom(phi, tol, seed=seed, samples=settings.OZKIT['WITNESS_SAMPLES'])
        report.residuals['roundtrip'] = map_distance(from_cone_hom(rep, tol), phi)
        self.record(report, rep, tol, seed)
        if report.residuals['roundtrip'] > tol.scaled(1.0):
            self.fail(report, InvalidRep.__name__, 'The representation does not reproduce the map.')
        return serialize(ConeHomRepSerializer, rep)

    def record(self, report, rep, tol, seed):
        check = verify_hom(rep, tol, seed=seed)
        report.residuals['multiplicativity'] = check.multiplicativity
        report.residuals['adjoint'] = check.adjoint
        if not check.passed:
            self.fail(report, InvalidRep.__name__, 'The representation is not a *-homomorphism.')
