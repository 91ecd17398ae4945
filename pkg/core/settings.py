"""
Django settings for the ozkit project.

ozkit is driven entirely through ``manage.py``: there is no web surface, so the settings only configure the installed
apps, the ``OZKIT`` numerical defaults and logging.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/topics/settings/
"""
import secrets
from pathlib import Path

import environ


# Initialise environment variables
env = environ.Env(
    DEBUG=(bool, False),
    SECRET_KEY=(str, secrets.token_urlsafe(50)),
    OZKIT_TOL=(float, 1e-8),
    OZKIT_EPS_RANK=(float, 1e-7),
    OZKIT_SEED=(int, 0),
    OZKIT_WITNESS_SAMPLES=(int, 64),
    OZKIT_LOG_LEVEL=(str, 'WARNING'),
)

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

environ.Env.read_env(BASE_DIR / '.env')

# Only used by Django internals, nothing is signed.
SECRET_KEY = env('SECRET_KEY')

DEBUG = env('DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Third party apps
    'rest_framework',

    # Custom Apps
    'algebra',
    'cp_maps',
    'order_zero',
    'cone_corr',
    'cuntz',
    'traces',
    'generators',
    'cli',
]

# No models are stored; the dummy backend keeps the test runner from creating databases.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


#: Configures the Django Rest Framework (DRF) settings. Serializers are only used for the JSON documents read and
#: written by the management commands, so only the float handling matters here.
REST_FRAMEWORK = {
    'COERCE_DECIMAL_TO_STRING': False,
    'UNAUTHENTICATED_USER': None,
}


#: Numerical defaults of the management commands. The library functions never read these; commands translate them
#: into explicit ``Tolerance`` and seed arguments.
OZKIT = {
    # Default of --tol, used for both the equality and the positivity floor.
    'TOL': env('OZKIT_TOL'),
    # Singular values below EPS_RANK times the largest one count as zero.
    'EPS_RANK': env('OZKIT_EPS_RANK'),
    # Default of --seed.
    'SEED': env('OZKIT_SEED'),
    # Number of random self-adjoint elements tried when looking for an orthogonality violation.
    'WITNESS_SAMPLES': env('OZKIT_WITNESS_SAMPLES'),
}


#: Logging goes to stderr so that stdout carries nothing but the JSON reports.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'simple',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': env('OZKIT_LOG_LEVEL'),
            'propagate': False,
        }
        for app in ('algebra', 'cp_maps', 'order_zero', 'cone_corr', 'cuntz', 'traces', 'generators', 'cli')
    },
}
