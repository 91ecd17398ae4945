from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class CuntzConfig(AppConfig):
    name = 'cuntz'
    verbose_name = _('Cuntz comparison')
