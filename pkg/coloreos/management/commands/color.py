from coloreos.cli import DiagramCommand, usage_error
from coloreos.coloring_search import quandle_coloring_count
from coloreos.forms import CuandleForm, ParametrosLinealesForm
from coloreos.linear_coloring import ColoringLimitError, coloring_count, enumerate_colorings


class Command(DiagramCommand):
    help = 'Cuenta los coloreos de un diagrama por (Z_n, l*k) o por un cuandle del catálogo'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int)
        parser.add_argument('--ell', type=int, default=1)
        parser.add_argument('--k', type=int)
        parser.add_argument('--quandle', help='Nombre del catálogo (Z3_1x1, S4, QS6, ...) o tabla JSON')
        parser.add_argument('--list', type=int, metavar='N', help='Muestra hasta N coloreos (sólo lineales)')

    def handle(self, *args, **options):
        diagram = self.load_diagram(options)
        if options.get('quandle'):
            if options.get('n') is not None:
                raise usage_error("Use --quandle o --n/--ell/--k, no ambos.")
            quandle = self.validated(CuandleForm({'quandle': options['quandle']}))['quandle']
            count = quandle_coloring_count(diagram, quandle)
            order, label = quandle.order, quandle.display_name
            colorings = None
        else:
            params = self.validated(ParametrosLinealesForm({
                'n': options.get('n'), 'ell': options.get('ell'), 'k': options.get('k'),
            }))['params']
            count = coloring_count(diagram, params)
            order, label = params.n, params.label
            colorings = None
            if options.get('list'):
                try:
                    colorings = enumerate_colorings(diagram, params, limit=options['list'], truncate=True)
                except ColoringLimitError as exc:
                    raise usage_error(str(exc)) from exc

        colorable = count > order
        text = f"count: {count}, colorable: {'yes' if colorable else 'no'}"
        data = {'count': str(count), 'colorable': colorable, 'quandle': label}
        if colorings is not None:
            text += '\n' + '\n'.join(' '.join(map(str, coloring.assignment)) for coloring in colorings)
            data['colorings'] = [coloring.to_json() for coloring in colorings]
        self.emit(options, text, data)
