
from pathlib import Path
import os
from dotenv import load_dotenv


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv()
SECRET_KEY = os.getenv('SECRET_KEY', 'glchars-local')
REDIS_URL = os.environ.get('REDIS_URL')
DEBUG = os.getenv('DEBUG', 'False') == 'True'
ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'combinatorics',
    'orbits',
    'cyclotomic',
    'symfunc',
    'hall',
    'chartable',
    'oracle',
    'cli',
]

# Sin base de datos: todo el cálculo es en memoria y la caché vive en disco.
DATABASES = {}

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}

# ─── Límites de recursos ──────────────────────────────────────────────────────

GLCHARS_CACHE_DIR            = os.getenv('GLCHARS_CACHE_DIR', str(BASE_DIR / '.glchars-cache'))
GLCHARS_MAX_FIELD_SIZE       = int(os.getenv('GLCHARS_MAX_FIELD_SIZE', 10**6))
GLCHARS_MAX_GROUP_ORDER      = int(os.getenv('GLCHARS_MAX_GROUP_ORDER', 10**4))
GLCHARS_MAX_CONDUCTOR_DEGREE = int(os.getenv('GLCHARS_MAX_CONDUCTOR_DEGREE', 2000))
GLCHARS_THREADS              = int(os.getenv('GLCHARS_THREADS', 1))

# ─── Celery ───────────────────────────────────────────────────────────────────

CELERY_BROKER_URL = REDIS_URL
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_BACKEND = REDIS_URL
# Sin broker las tareas se ejecutan en el propio proceso
CELERY_TASK_ALWAYS_EAGER = not REDIS_URL

# ─── Logging ──────────────────────────────────────────────────────────────────

LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
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
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in ('combinatorics', 'orbits', 'cyclotomic', 'symfunc',
                    'hall', 'chartable', 'oracle', 'cli')
    },
}


# Internationalization
# https://docs.djangoproject.com/en/5.1/topics/i18n/

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'Europe/Madrid'
USE_I18N = True
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
