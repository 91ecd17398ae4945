from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class OrderZeroConfig(AppConfig):
    name = 'order_zero'
    verbose_name = _('Order zero maps')
