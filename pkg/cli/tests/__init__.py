"""
Test helpers for the management commands.

- `CommandTestCaseHelperMixin`: Runs a command through ``call_command`` in a temporary directory and returns its exit
  code with the parsed report; writes input documents into the same directory.
"""
import json
import tempfile
from io import StringIO
from pathlib import Path
from typing import Any, Tuple

from django.core.management import call_command
from django.core.management.base import CommandError

from core.serializers import serialize
from cp_maps.maps import CpMap
from cp_maps.serializers import MapSerializer
from generators.tests import GeneratorTestCaseHelperMixin
from ..utils import dump_json


class CommandTestCaseHelperMixin(GeneratorTestCaseHelperMixin):

    def setUp(self):
        super().setUp()
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.directory = Path(directory.name)

    def path(self, name: str) -> str:
        return str(self.directory / name)

    def write_document(self, name: str, data: Any) -> str:
        path = self.path(name)
        Path(path).write_text(dump_json(data), encoding='utf-8')
        return path

    def write_map(self, name: str, phi: CpMap) -> str:
        return self.write_document(name, serialize(MapSerializer, phi))

    def read_document(self, name: str) -> Any:
        return json.loads(Path(self.path(name)).read_text(encoding='utf-8'))

    def call_raw(self, name: str, *args, **options) -> Tuple[int, str]:
        """
        Run a command and return its exit code and stdout.
        """
        stdout = StringIO()
        try:
            call_command(name, *args, stdout=stdout, stderr=StringIO(), **options)
        except CommandError as error:
            return error.returncode, stdout.getvalue()
        return 0, stdout.getvalue()

    def call(self, name: str, *args, **options) -> Tuple[int, dict]:
        """
        Run a command and return its exit code and parsed report.
        """
        code, text = self.call_raw(name, *args, **options)
        return code, json.loads(text)
