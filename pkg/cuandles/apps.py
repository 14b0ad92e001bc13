from django.apps import AppConfig


class CuandlesConfig(AppConfig):
    name = 'cuandles'
    verbose_name = 'Cuandles finitos'
