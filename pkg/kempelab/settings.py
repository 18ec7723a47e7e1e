"""
Django settings for the kempelab project.

Nothing is served over HTTP: Django provides configuration, logging,
the management-command surface and the REST framework serializers
used for every JSON document.
"""

import os
from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='kempelab-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',

    'graphs',
    'kempe',
    'zmodel',
    'certificates',
    'constructive',
    'generators',
    'minors',
    'console',
]

# No persistent storage, result tables are plain files
DATABASES = {}

APP_NAME = config('APP_NAME', default='kempelab')

USE_I18N = False
USE_TZ = True
TIME_ZONE = 'UTC'
LANGUAGE_CODE = 'en-us'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Solver and sweep defaults, overridable from the environment or a .env file

KEMPE_THREADS = config('KEMPE_THREADS', default=1, cast=int)

KEMPE_BUDGET_NODES = config('KEMPE_BUDGET_NODES', default=10 ** 8, cast=int)

KEMPE_BUDGET_SECS = config('KEMPE_BUDGET_SECS', default=300.0, cast=float)

KEMPE_SWEEP_MAX_N = config('KEMPE_SWEEP_MAX_N', default=6, cast=int)

KEMPE_LOG_LEVEL = config('KEMPE_LOG_LEVEL', default='INFO')

# Print the progress bar of long sweeps on stderr
KEMPE_PROGRESS = config('KEMPE_PROGRESS', default=False, cast=bool)


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file_debug': {
            'level': 'DEBUG',
            'class': 'logging.FileHandler',
            'filename': os.path.join(BASE_DIR, 'logs/debug.log'),
            'formatter': 'verbose',
        },
        'file_error': {
            'level': 'ERROR',
            'class': 'logging.FileHandler',
            'filename': os.path.join(BASE_DIR, 'logs/error.log'),
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': True,
        },
        'basic': {
            'handlers': ['console', 'file_debug', 'file_error'],
            'level': KEMPE_LOG_LEVEL,
            'propagate': False,
        },
    },
}

# Only add file handlers if the directory exists (i.e., development environment)
if not os.path.exists(os.path.join(BASE_DIR, 'logs')):
    for handler in ['file_debug', 'file_error']:
        LOGGING['loggers']['basic']['handlers'].remove(handler)
        LOGGING['handlers'].pop(handler)
