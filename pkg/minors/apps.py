from django.apps import AppConfig


class MinorsConfig(AppConfig):
    name = 'minors'
    verbose_name = 'Minor containment and planarity'
