from django.db import models
from django.utils.translation import gettext_lazy as _


class Verdict(models.TextChoices):
    """
    Enumeration of the outcomes written to a report, with the exit code of each.
    """
    PASS = 'pass', _('Pass')
    FAIL = 'fail', _('Fail')
    ERROR = 'error', _('Error')

    @property
    def exit_code(self) -> int:
        return {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.ERROR: 2}[self]
