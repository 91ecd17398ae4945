from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class AlgebraConfig(AppConfig):
    name = 'algebra'
    verbose_name = _('Finite-dimensional C*-algebras')
