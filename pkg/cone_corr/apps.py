from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class ConeCorrConfig(AppConfig):
    name = 'cone_corr'
    verbose_name = _('Cone correspondence')
