"""
Django settings for sistema_nudos project.

Generated by 'django-admin startproject' using Django 5.2.8.

El proyecto no sirve páginas web: toda la funcionalidad se expone con
comandos de administración (``python manage.py alexander|color|min_order|twist``).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Cargar variables de entorno desde archivo .env (si existe)
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-n0d0s-c0l0re0s-cuandles-8b1f2e6a')

DEBUG = os.environ.get('DEBUG', 'True') == 'True'

ALLOWED_HOSTS = os.environ.get('ALLOWED_HOSTS', '*').split(',')


# Application definition

INSTALLED_APPS = [
    'cuandles',
    'diagramas',
    'coloreos',
]

# Sin base de datos: los cálculos son puros y los tests usan SimpleTestCase
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'es-es'

TIME_ZONE = 'America/Argentina/Buenos_Aires'

USE_I18N = True

USE_TZ = True


# ============================================
# CONFIGURACIÓN DE CÁLCULO
# ============================================
# Cota de arcos para el motor de backtracking (twist hasta c = 40 entra holgado)
NUDOS_MAX_ARCOS_BUSQUEDA = int(os.environ.get('NUDOS_MAX_ARCOS_BUSQUEDA', '60'))

# Orden máximo aceptado por la prueba de isomorfismo por fuerza bruta
NUDOS_MAX_ORDEN_ISOMORFISMO = int(os.environ.get('NUDOS_MAX_ORDEN_ISOMORFISMO', '10'))

# Mayor q^c que aceptan los oráculos exhaustivos
NUDOS_MAX_FUERZA_BRUTA = int(os.environ.get('NUDOS_MAX_FUERZA_BRUTA', '2000000'))

# Límite por defecto para enumerar coloreos
NUDOS_LIMITE_ENUMERACION = int(os.environ.get('NUDOS_LIMITE_ENUMERACION', '1000'))


# ============================================
# CONFIGURACIÓN DE LOGGING
# ============================================
NUDOS_LOG_LEVEL = os.environ.get('NUDOS_LOG_LEVEL', 'WARNING')

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
            'formatter': 'simple',
        },
    },
    'loggers': {
        'cuandles': {'handlers': ['console'], 'level': NUDOS_LOG_LEVEL, 'propagate': False},
        'diagramas': {'handlers': ['console'], 'level': NUDOS_LOG_LEVEL, 'propagate': False},
        'coloreos': {'handlers': ['console'], 'level': NUDOS_LOG_LEVEL, 'propagate': False},
    },
}
