from diagramas.alexander import AlexanderError, alexander_polynomial

from coloreos.cli import DiagramCommand, usage_error


class Command(DiagramCommand):
    help = 'Calcula el polinomio de Alexander normalizado de un diagrama'

    def handle(self, *args, **options):
        diagram = self.load_diagram(options)
        try:
            delta = alexander_polynomial(diagram)
        except AlexanderError as exc:
            raise usage_error(str(exc)) from exc
        self.emit(options, str(delta), {'alexander': delta.to_json(), 'text': str(delta)})
