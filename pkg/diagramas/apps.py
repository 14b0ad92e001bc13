from django.apps import AppConfig


class DiagramasConfig(AppConfig):
    name = 'diagramas'
    verbose_name = 'Diagramas de nudos'
