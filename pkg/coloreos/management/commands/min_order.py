from diagramas.alexander import AlexanderError, alexander_polynomial

from coloreos.cli import DiagramCommand, usage_error
from coloreos.coloring_search import (
    ColorabilityError,
    SearchScaleError,
    minimal_linear_order,
    minimal_quandle_order,
)


class Command(DiagramCommand):
    help = 'Orden mínimo de coloreo lineal o de cuandle de un nudo'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--mode', choices=['linear', 'quandle'], default='linear')

    def handle(self, *args, **options):
        diagram = self.load_diagram(options)
        try:
            if options['mode'] == 'linear':
                result = minimal_linear_order(alexander_polynomial(diagram))
            else:
                result = minimal_quandle_order(diagram)
        except (AlexanderError, ColorabilityError, SearchScaleError) as exc:
            raise usage_error(str(exc)) from exc
        self.emit(options, str(result), result.to_json())
