from django.db import models
from django.utils.translation import gettext_lazy as _


class GenKind(models.TextChoices):
    """
    Enumeration of the map families produced by the ``gen`` command.
    """
    HOM = 'hom', _('*-homomorphism')
    OZ = 'oz', _('Order zero map')
    CP = 'cp', _('Completely positive map')
