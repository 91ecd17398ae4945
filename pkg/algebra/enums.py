from django.db import models
from django.utils.translation import gettext_lazy as _


class ArithOp(models.TextChoices):
    """
    Enumeration of the blockwise element operations understood by :func:`algebra.algebras.element_arith`.
    """
    ADD = 'add', _('Add')
    MUL = 'mul', _('Multiply')
    ADJOINT = 'adjoint', _('Adjoint')
    SCALE = 'scale', _('Scale')
