from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class CpMapsConfig(AppConfig):
    name = 'cp_maps'
    verbose_name = _('Completely positive maps')
