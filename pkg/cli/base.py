"""
The base class of the ozkit management commands.

Every command reads its inputs, calls one library operation and writes a :class:`cli.reports.Report` to stdout.
Artifacts (maps, decompositions, representations) go to the ``-o`` file when one is given and into the report's
``result`` otherwise. Domain errors are turned into reports: a mathematical failure exits with 1, a usage or schema
problem with 2. Progress and logging go to stderr only.

Usage Guidelines:
- Subclass :class:`BaseReportCommand`, add the command's own arguments in ``add_command_arguments`` and implement
  ``run``, filling in the report and returning the serialized artifact (or None).
- Raise the errors of :mod:`core.exceptions`; never write to stdout directly.
"""
import logging
import time
from typing import Any, Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from algebra.tolerance import Tolerance
from core.exceptions import NotOrderZero, OzkitError
from core.serializers import serialize
from order_zero.serializers import WitnessSerializer
from .constants import EXIT_MESSAGE
from .enums import Verdict
from .reports import Report
from .serializers import ReportSerializer
from .utils import dump_json, write_atomic


logger = logging.getLogger(__name__)


class BaseReportCommand(BaseCommand):
    """
    A management command that always answers with a JSON report and an exit code.
    """
    requires_system_checks = []
    #: Whether the command produces an artifact and accepts ``-o``.
    produces_artifact = False

    @property
    def command_name(self) -> str:
        return type(self).__module__.rsplit('.', 1)[-1]

    def add_arguments(self, parser):
        parser.add_argument('--tol', type=float, help='Equality and positivity tolerance (default: OZKIT_TOL).')
        parser.add_argument('--seed', type=int, help='Seed of every random choice (default: OZKIT_SEED).')
        parser.add_argument('--timing', action='store_true', help='Add the wall time to the report.')
        if self.produces_artifact:
            parser.add_argument('-o', '--output', help='Write the artifact to this file instead of the report.')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        """
        Hook for the arguments of a concrete command.
        """

    def run(self, report: Report, tol: Tolerance, seed: int, **options) -> Optional[Any]:
        """
        Run the command, recording residuals and the verdict on ``report``.

        Returns:
            - The serialized artifact, or None.
        """
        raise NotImplementedError

    def fail(self, report: Report, reason: str, message: str) -> None:
        report.verdict = Verdict.FAIL
        report.reason = reason
        report.message = message

    def record_evidence(self, report: Report, error: NotOrderZero) -> None:
        """
        Copy the failed residuals and the violating pair of a rejected map into the report.
        """
        if error.report is not None:
            report.residuals.update(error.report.residuals)
        if error.witness is not None:
            report.witness = serialize(WitnessSerializer, error.witness)

    def handle(self, *args, **options):
        start = time.perf_counter()
        report = Report(command=self.command_name)
        artifact = None
        try:
            tol = Tolerance.from_settings(options['tol'])
            seed = settings.OZKIT['SEED'] if options['seed'] is None else options['seed']
            artifact = self.run(report, **{**options, 'tol': tol, 'seed': seed})
            if artifact is not None and report.verdict == Verdict.PASS:
                if options.get('output'):
                    write_atomic(options['output'], dump_json(artifact))
                    self.stderr.write(self.style.SUCCESS(f'Wrote {options["output"]}'))
                else:
                    report.result = artifact
        except OzkitError as error:
            logger.info('%s: %s', self.command_name, error)
            report.verdict = Verdict.ERROR if error.exit_code == Verdict.ERROR.exit_code else Verdict.FAIL
            report.reason = error.reason
            report.message = str(error)
            if isinstance(error, NotOrderZero):
                self.record_evidence(report, error)
        if options['timing']:
            report.timing_ms = (time.perf_counter() - start) * 1000.0

        self.stdout.write(dump_json(serialize(ReportSerializer, report)), ending='')
        if report.exit_code:
            raise CommandError(EXIT_MESSAGE.format(verdict=Verdict(report.verdict).value), returncode=report.exit_code)
