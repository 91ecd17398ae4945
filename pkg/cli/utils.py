"""
File and argument helpers of the management commands.

Inputs are JSON documents read with :func:`load_document`; outputs go through :func:`write_atomic`, which writes a
temporary file next to the target and renames it, so a failing command never leaves a partial file behind.
"""
import json
import math
import os
import tempfile
from pathlib import Path
from typing import Any, List, Type

from rest_framework import serializers

from core.exceptions import InvalidArgument, SchemaError
from core.serializers import deserialize
from .constants import JSON_ERROR, JSON_INDENT, MULTIPLICITIES_ERROR, NUMBER_LIST_ERROR, READ_ERROR, WRITE_ERROR


def dump_json(data: Any) -> str:
    """
    The canonical text of a document: two-space indentation, declaration order, trailing newline.
    """
    return json.dumps(data, indent=JSON_INDENT, ensure_ascii=False) + '\n'


def load_document(path: str) -> Any:
    """
    Read and parse a JSON file.

    Raises:
        - SchemaError: If the file cannot be read or is not valid JSON.
    """
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise SchemaError(READ_ERROR.format(path=path, error=error.strerror or error))
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise SchemaError(JSON_ERROR.format(path=path, error=error))


def load(serializer_class: Type[serializers.Serializer], path: str, **context) -> Any:
    """
    Read a file and build the domain object described by it.

    Raises:
        - SchemaError: If the file cannot be read, parsed or validated.
    """
    return deserialize(serializer_class, load_document(path), **context)


def write_atomic(path: str, text: str) -> None:
    """
    Replace ``path`` with ``text`` in one rename.

    Raises:
        - SchemaError: If the file cannot be written.
    """
    target = Path(path)
    try:
        descriptor, temporary = tempfile.mkstemp(dir=target.parent, prefix=f'.{target.name}.', suffix='.tmp')
        try:
            with os.fdopen(descriptor, 'w', encoding='utf-8') as handle:
                handle.write(text)
            os.replace(temporary, target)
        except BaseException:
            os.unlink(temporary)
            raise
    except OSError as error:
        raise SchemaError(WRITE_ERROR.format(path=path, error=error.strerror or error))


def parse_numbers(value: str) -> List[float]:
    """
    Parse ``"0.5,1,-2"``.

    Raises:
        - InvalidArgument: If an entry is not a finite number.
    """
    try:
        numbers = [float(part) for part in value.split(',')]
    except ValueError:
        raise InvalidArgument(NUMBER_LIST_ERROR.format(value=value))
    if not all(math.isfinite(number) for number in numbers):
        raise InvalidArgument(NUMBER_LIST_ERROR.format(value=value))
    return numbers


def parse_integers(value: str) -> List[int]:
    """
    Raises:
        - InvalidArgument: If an entry is not an integer.
    """
    try:
        return [int(part) for part in value.split(',')]
    except ValueError:
        raise InvalidArgument(NUMBER_LIST_ERROR.format(value=value))


def parse_multiplicities(value: str) -> List[List[int]]:
    """
    Parse ``"1,0;0,2"`` into one row per codomain block.

    Raises:
        - InvalidArgument: If a row is malformed.
    """
    try:
        return [[int(part) for part in row.split(',')] for row in value.split(';')]
    except ValueError:
        raise InvalidArgument(MULTIPLICITIES_ERROR.format(value=value))
