import math
from typing import Optional, Union

import attrs

from core.exceptions import InvalidArgument
from .constants import DEFAULT_EPS_EQ, DEFAULT_EPS_PSD, DEFAULT_EPS_RANK, NEGATIVE_TOLERANCE_ERROR


def _non_negative(instance, attribute, value) -> None:
    """
    attrs validator rejecting negative and non-finite tolerances.

    Raises:
        - InvalidArgument: If ``value`` is negative, NaN or infinite.
    """
    if not math.isfinite(value) or value < 0:
        raise InvalidArgument(NEGATIVE_TOLERANCE_ERROR.format(name=attribute.name, value=value))


@attrs.frozen
class Tolerance:
    """
    The three numerical thresholds used throughout the library.

    Attributes:
        - eps_psd (float): Eigenvalue floor for positivity.
        - eps_eq (float): Entrywise / operator-norm equality.
        - eps_rank (float): Singular-value cutoff relative to the largest singular value.
    """
    eps_psd: float = attrs.field(default=DEFAULT_EPS_PSD, converter=float, validator=_non_negative)
    eps_eq: float = attrs.field(default=DEFAULT_EPS_EQ, converter=float, validator=_non_negative)
    eps_rank: float = attrs.field(default=DEFAULT_EPS_RANK, converter=float, validator=_non_negative)

    @classmethod
    def coerce(cls, tol: Union['Tolerance', float, None]) -> 'Tolerance':
        """
        Normalize the ``tol`` argument accepted by the library functions.

        ``None`` gives the defaults, a number sets both ``eps_eq`` and ``eps_psd`` and keeps the default rank cutoff.

        Args:
            - tol (Tolerance | float | None): The value to normalize.

        Returns:
            - Tolerance: The corresponding tolerance.
        """
        if tol is None:
            return cls()
        if isinstance(tol, cls):
            return tol
        return cls(eps_psd=tol, eps_eq=tol)

    @classmethod
    def from_settings(cls, tol: Optional[float] = None) -> 'Tolerance':
        """
        Build the tolerance used by the management commands from the ``OZKIT`` settings.

        Args:
            - tol (float, optional): Overrides ``OZKIT['TOL']`` (the ``--tol`` flag).

        Returns:
            - Tolerance: The tolerance of the current invocation.
        """
        from django.conf import settings

        tol = settings.OZKIT['TOL'] if tol is None else tol
        return cls(eps_psd=tol, eps_eq=tol, eps_rank=settings.OZKIT['EPS_RANK'])

    def scaled(self, scale: float) -> float:
        """
        The equality threshold for operands of size ``scale``: ``eps_eq * max(1, scale)``.
        """
        return self.eps_eq * max(1.0, scale)
