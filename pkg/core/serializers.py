"""
Serializer building blocks shared by the apps.

Complex scalars are written as ``[re, im]`` pairs and matrices as row-major nested lists of such pairs. Documents are
read through :func:`deserialize`, which turns every validation problem into a :class:`core.exceptions.SchemaError`.
"""
import math
from typing import Any, Type

import numpy as np
from rest_framework import serializers

from .constants import NON_FINITE_ERROR
from .exceptions import OzkitError, SchemaError


def complex_to_pair(value: complex) -> list:
    value = complex(value)
    return [float(value.real), float(value.imag)]


def _finite(value: Any) -> float:
    try:
        value = float(value)
    except OverflowError:
        value = math.inf
    if not math.isfinite(value):
        raise serializers.ValidationError(NON_FINITE_ERROR.format(value=value))
    return value


def pair_to_complex(value: Any) -> complex:
    """
    Parse a ``[re, im]`` pair; plain numbers are accepted as real scalars.

    Raises:
        - serializers.ValidationError: If the value is neither, or has a NaN or infinite part.
    """
    if isinstance(value, bool):
        raise serializers.ValidationError('Expected a number or an [re, im] pair.')
    if isinstance(value, (int, float)):
        return complex(_finite(value))
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
            isinstance(part, (int, float)) and not isinstance(part, bool) for part in value):
        return complex(_finite(value[0]), _finite(value[1]))
    raise serializers.ValidationError('Expected a number or an [re, im] pair.')


class ComplexField(serializers.Field):
    """
    A complex scalar as ``[re, im]``.
    """

    def to_representation(self, value):
        return complex_to_pair(value)

    def to_internal_value(self, data):
        return pair_to_complex(data)


class ComplexMatrixField(serializers.Field):
    """
    A complex matrix as a row-major nested list of ``[re, im]`` pairs.

    Only rectangular matrices are accepted; square matrices are enforced by the serializers that know the expected
    sizes.
    """
    default_error_messages = {
        'not_a_matrix': 'Expected a matrix given as a list of rows.',
        'ragged': 'All rows of a matrix must have the same length.',
    }

    def to_representation(self, value):
        return [[complex_to_pair(entry) for entry in row] for row in np.asarray(value)]

    def to_internal_value(self, data):
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            self.fail('not_a_matrix')
        if len({len(row) for row in data}) > 1:
            self.fail('ragged')
        rows = [[pair_to_complex(entry) for entry in row] for row in data]
        width = len(rows[0]) if rows else 0
        return np.array(rows, dtype=complex).reshape(len(rows), width)


class FiniteFloatField(serializers.FloatField):
    """
    A float field that rejects NaN and infinities, which ``json.loads`` accepts.
    """

    def to_internal_value(self, data):
        return _finite(super().to_internal_value(data))


class RealVectorField(serializers.ListField):
    child = FiniteFloatField()


def deserialize(serializer_class: Type[serializers.Serializer], data: Any, **context) -> Any:
    """
    Validate ``data`` with ``serializer_class`` and build the domain object.

    Args:
        - serializer_class (type): A serializer whose ``create`` returns a domain object.
        - data: The parsed JSON document.
        - **context: Serializer context, e.g. the algebra an element belongs to.

    Returns:
        - The object built by ``serializer.save()``.

    Raises:
        - SchemaError: If the document does not validate; the message carries the serializer errors.
    """
    serializer = serializer_class(data=data, context=context)
    if not serializer.is_valid():
        raise SchemaError(f'Invalid document: {serializer.errors}')
    try:
        return serializer.save()
    except OzkitError as error:
        raise SchemaError(f'Invalid document: {error}')


def serialize(serializer_class: Type[serializers.Serializer], instance: Any, **context) -> Any:
    return serializer_class(instance, context=context).data
