"""
The error hierarchy shared by every ozkit app.

All errors are :class:`django.core.exceptions.ValidationError` subclasses carrying a message and a ``code``. The
``exit_code`` class attribute tells the management commands how to terminate: ``1`` for a mathematical failure and
``2`` for a usage or schema problem.
"""
from typing import Any, Optional

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from . import constants


class OzkitError(ValidationError):
    """
    Base class of all domain errors.

    Subclasses only override ``default_message``, ``default_code`` and, for usage errors, ``exit_code``.
    """

    #: Message used when the error is raised without one.
    default_message = 'ozkit error'
    #: Machine readable code, also written to the CLI reports.
    default_code = 'ozkit_error'
    #: Process exit code of the management commands.
    exit_code = 1

    def __init__(self, message: Optional[str] = None, code: Optional[str] = None, params: Any = None):
        super().__init__(
            message=message or _(self.default_message),
            code=code or self.default_code,
            params=params
        )

    @property
    def reason(self) -> str:
        """
        Name of the error class, used as ``reason`` in reports.
        """
        return type(self).__name__

    def __str__(self) -> str:
        return str(self.message)


class InvalidAlgebra(OzkitError):
    default_message = constants.INVALID_ALGEBRA_ERROR
    default_code = 'invalid_algebra'
    exit_code = 2


class AlgebraMismatch(OzkitError):
    default_message = constants.ALGEBRA_MISMATCH_ERROR
    default_code = 'algebra_mismatch'


class NotSelfAdjoint(OzkitError):
    default_message = constants.NOT_SELF_ADJOINT_ERROR
    default_code = 'not_self_adjoint'


class NotPositive(OzkitError):
    default_message = constants.NOT_POSITIVE_ERROR
    default_code = 'not_positive'


class InvalidArgument(OzkitError):
    default_message = constants.INVALID_ARGUMENT_ERROR
    default_code = 'invalid_argument'
    exit_code = 2


class InvalidMap(OzkitError):
    default_message = constants.INVALID_MAP_ERROR
    default_code = 'invalid_map'
    exit_code = 2


class NotCompletelyPositive(OzkitError):
    default_message = constants.NOT_COMPLETELY_POSITIVE_ERROR
    default_code = 'not_completely_positive'


class NotContractive(OzkitError):
    default_message = constants.NOT_CONTRACTIVE_ERROR
    default_code = 'not_contractive'


class NotOrderZero(OzkitError):
    """
    Raised when a map fails the order zero checks.

    Attributes:
        - witness: An ``OrderZeroWitness`` (a positive orthogonal pair whose images do not multiply to zero), or
          ``None`` when the search found no pair above the tolerance.
        - report: The ``DecompositionReport`` of the failed verification, if one was computed.
    """
    default_message = constants.NOT_ORDER_ZERO_ERROR
    default_code = 'not_order_zero'

    def __init__(self, message: Optional[str] = None, witness: Any = None, report: Any = None, **kwargs):
        super().__init__(message, **kwargs)
        self.witness = witness
        self.report = report


class InvalidFunction(OzkitError):
    default_message = constants.INVALID_FUNCTION_ERROR
    default_code = 'invalid_function'


class InvalidRep(OzkitError):
    default_message = constants.INVALID_REP_ERROR
    default_code = 'invalid_rep'


class NotSubequivalent(OzkitError):
    default_message = constants.NOT_SUBEQUIVALENT_ERROR
    default_code = 'not_subequivalent'


class DeltaTooLarge(OzkitError):
    default_message = constants.DELTA_TOO_LARGE_ERROR
    default_code = 'delta_too_large'


class EmbeddingTooLarge(OzkitError):
    default_message = constants.EMBEDDING_TOO_LARGE_ERROR
    default_code = 'embedding_too_large'


class SchemaError(OzkitError):
    default_message = constants.SCHEMA_ERROR
    default_code = 'schema_error'
    exit_code = 2
