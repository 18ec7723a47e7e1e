from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _


def validate_probability(value):
    if not 0.0 <= value <= 1.0:
        raise ValidationError(
            _('Must be between 0 and 1'),
            params={'value': value},
        )


def validate_even(value):
    if value % 2:
        raise ValidationError(
            _('Must be an even number'),
            params={'value': value},
        )


def validate_positive(value):
    if value <= 0:
        raise ValidationError(
            _('Must be positive'),
            params={'value': value},
        )
