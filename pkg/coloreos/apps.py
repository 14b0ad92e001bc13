from django.apps import AppConfig


class ColoreosConfig(AppConfig):
    name = 'coloreos'
    verbose_name = 'Coloreos por cuandles'
