from django.apps import AppConfig


class ConstructiveConfig(AppConfig):
    name = 'constructive'
    verbose_name = 'Constructive certificate builders'
