import csv
import json
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from coloreos.cli import usage_error
from coloreos.coloring_search import minimal_quandle_order
from coloreos.forms import TwistForm, form_error_text
from coloreos.reports import twist_table_pdf
from coloreos.twist import twist_diagram, twist_table


class Command(BaseCommand):
    help = 'Clasifica nudos twist por su orden mínimo de cuandle'

    def add_arguments(self, parser):
        parser.add_argument('--c', type=int, help='Cantidad de cruces (>= 3)')
        parser.add_argument('--range', help='Rango A..B de cantidades de cruces')
        parser.add_argument('--format', choices=['text', 'json'], default='text')
        parser.add_argument('--verify', action='store_true',
                            help='Recalcula cada fila con la búsqueda sobre el catálogo')
        parser.add_argument('--pdf', metavar='FILE', help='Exporta la tabla a PDF')

    def handle(self, *args, **options):
        form = TwistForm({'c': options.get('c'), 'range': options.get('range')})
        if not form.is_valid():
            raise usage_error(form_error_text(form))
        first, last = form.cleaned_data['bounds']
        rows = twist_table(first, last)

        if options.get('verify'):
            self._verify(rows)

        if options.get('pdf'):
            Path(options['pdf']).write_bytes(twist_table_pdf(rows))
            self.stderr.write(self.style.SUCCESS(f"PDF generado: {options['pdf']}"))

        if options.get('format') == 'json':
            data = [{**verdict.to_json(), 'delta': delta.to_json()} for _, delta, verdict in rows]
            self.stdout.write(json.dumps(data if options.get('range') else data[0], ensure_ascii=False))
        elif options.get('range'):
            writer = csv.writer(self.stdout, lineterminator='\n')
            writer.writerow(['c', 'delta', 'q_value', 'witness'])
            for c, delta, verdict in rows:
                writer.writerow([c, str(delta), verdict.q_text, verdict.witness_label or ''])
        else:
            self.stdout.write(str(rows[0][2]))

    def _verify(self, rows):
        for c, _, verdict in rows:
            found = minimal_quandle_order(twist_diagram(c))
            expected = (verdict.q_value, verdict.witness)
            if (found.order, found.witness_quandle) != expected:
                raise CommandError(f"c={c}: classifier gives {expected}, search gives {(found.order, found.witness_quandle)}")
        self.stderr.write(self.style.SUCCESS(f"{len(rows)} filas verificadas por búsqueda"))
