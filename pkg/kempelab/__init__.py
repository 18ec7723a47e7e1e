"""
Kempe chains and rooted minors: exact search, counting certificates and
constructive builders for small colored graphs.
"""

import os


def setup():
    """
    Configure Django for library use outside ``manage.py``
    (the serializers and the settings-backed defaults need it)
    """
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'kempelab.settings')

    import django
    django.setup()
