"""
This file contains the core settings of the application. Settings specified within this file are used directly by
the Django framework, or a third-party extension / application for Django.

**User specifiable environment variables:**

**Basic Config**

- ``DEBUG`` - If set to true, enable debugging features, such as full tracebacks from management commands and
  DEBUG level console logging. **Default:** ``False``

- ``SECRET_KEY`` - Django refuses to start without one. No sessions or signed data are used by this project, so if
  it isn't set, a random key is generated for each run. **Default:** random

**Database Settings**

Nothing is stored, but Django's ``contenttypes`` / ``auth`` apps (needed by Django REST Framework) expect a
database to be configured.

- ``DB_NAME`` - Path of the SQLite database file, relative to the project root. **Default:** ``db.sqlite3``

For more information on this file, see
https://docs.djangoproject.com/en/3.2/topics/settings/
"""

import os

import dotenv
from getenv import env
from privex.helpers import is_true

from germclass.helpers import random_str

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Deal with the issue of conflicting dotenv packages by trying both methods...
try:
    dotenv.load_dotenv(os.path.join(BASE_DIR, '.env'))
except AttributeError:
    dotenv.read_dotenv(os.path.join(BASE_DIR, '.env'))

SECRET_KEY = env('SECRET_KEY', None)
if SECRET_KEY is None:
    SECRET_KEY = random_str(size=64)

DEBUG = is_true(env('DEBUG', False))

ALLOWED_HOSTS = ['127.0.0.1', 'localhost']

# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'germs',
]

REST_FRAMEWORK = {
    # Operator labels such as Δ³ are emitted as-is rather than \u escaped
    'UNICODE_JSON': True,
}

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, env('DB_NAME', 'db.sqlite3')),
    },
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'privex': {
            'format': '[%(asctime)s]: %(name)-55s -> %(funcName)-20s : %(levelname)-8s:: %(message)s',
            'style': '%'
        }
    },
    'handlers': {
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'privex'
        },
    },
    'loggers': {
        # Django's own errors go to the error stream, results own the output stream
        'django': {
            'handlers': ['console'],
            'level': 'ERROR',
            'propagate': False,
        },
    }
}

# Internationalization
# https://docs.djangoproject.com/en/3.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True
