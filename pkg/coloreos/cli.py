"""Piezas comunes de los comandos de administración"""

import json

from django.core.management.base import BaseCommand, CommandError

from .forms import FuenteDiagramaForm, form_error_text

USAGE_ERROR = 2


def usage_error(message):
    return CommandError(message, returncode=USAGE_ERROR)


class DiagramCommand(BaseCommand):
    """Comando que recibe un diagrama y escribe texto o JSON"""

    def add_arguments(self, parser):
        parser.add_argument('--input', help='Archivo de diagrama (.tri o .pd)')
        parser.add_argument('--inline', help='Diagrama escrito en la línea de comandos')
        parser.add_argument('--knot', help='Nudo incluido (trefoil, figure-eight, 10_124, twist-N, ...)')
        parser.add_argument('--diagram-format', choices=['auto', 'triples', 'pd'], default='auto')
        parser.add_argument('--format', choices=['text', 'json'], default='text')

    def load_diagram(self, options):
        form = FuenteDiagramaForm({
            'input': options.get('input'),
            'inline': options.get('inline'),
            'knot': options.get('knot'),
            'diagram_format': options.get('diagram_format') or 'auto',
        })
        if not form.is_valid():
            raise usage_error(form_error_text(form))
        return form.cleaned_data['diagram']

    def validated(self, form):
        if not form.is_valid():
            raise usage_error(form_error_text(form))
        return form.cleaned_data

    def emit(self, options, text, data):
        if options.get('format') == 'json':
            self.stdout.write(json.dumps(data, ensure_ascii=False))
        else:
            self.stdout.write(text)
