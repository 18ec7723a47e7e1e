from django.apps import AppConfig


class KempeConfig(AppConfig):
    name = 'kempe'
    verbose_name = 'Kempe chains'
