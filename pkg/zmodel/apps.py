from django.apps import AppConfig


class ZmodelConfig(AppConfig):
    name = 'zmodel'
    verbose_name = 'Doubled graphs'
