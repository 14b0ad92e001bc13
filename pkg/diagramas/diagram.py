"""
Diagramas orientados de nudos como ternas (over, right, left) sobre arcos.

Formatos soportados: texto de ternas (``X over right left``), código PD
orientado (``X[a,b,c,d]``) y JSON.
"""

import json
import logging
import re
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / 'datos'

DIAGRAM_FORMATS = ('triples', 'pd')


class DiagramError(ValueError):
    """Error de sintaxis o de validación de un diagrama"""

    def __init__(self, message, line=None, crossing=None):
        self.line = line
        self.crossing = crossing
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class CrossingTriple:
    over: int
    right: int
    left: int

    def as_tuple(self):
        return (self.over, self.right, self.left)


@dataclass(frozen=True)
class OrientedDiagram:
    """Diagrama de c cruces y c arcos (etiquetas 0..c-1)"""
    crossings: tuple
    name: str | None = None

    @classmethod
    def from_triples(cls, triples, name=None):
        return cls(tuple(CrossingTriple(*map(int, triple)) for triple in triples), name=name)

    @property
    def arc_count(self):
        return len(self.crossings)

    def triples(self):
        return [crossing.as_tuple() for crossing in self.crossings]

    def __len__(self):
        return len(self.crossings)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    invariant: str | None = None
    crossing: int | None = None
    message: str = "valid"

    def __bool__(self):
        return self.valid

    def raise_if_invalid(self):
        if not self.valid:
            raise DiagramError(self.message, crossing=self.crossing)


def _invalid(invariant, message, crossing=None):
    if crossing is not None:
        message = f"crossing {crossing}: {message}"
    return ValidationReport(False, invariant, crossing, message)


def validate(diagram):
    """Comprueba rango de etiquetas, ocupación de ranuras y conexión (una sola componente)"""
    c = diagram.arc_count
    if c == 0:
        return _invalid('nonempty', "no crossings")

    for index, crossing in enumerate(diagram.crossings):
        for arc in crossing.as_tuple():
            if not 0 <= arc < c:
                return _invalid('range', f"id out of range: {arc} not in 0..{c - 1}", index)
        if c > 1 and crossing.right == crossing.left:
            return _invalid('distinct', "right equals left", index)

    # Cada arco empieza en un cruce y termina en otro: dos apariciones en right/left
    slots = Counter()
    for crossing in diagram.crossings:
        slots[crossing.right] += 1
        slots[crossing.left] += 1
    for arc in range(c):
        if slots[arc] != 2:
            first = next((i for i, x in enumerate(diagram.crossings) if arc in (x.right, x.left)), None)
            return _invalid('slots', f"arc {arc} fills {slots[arc]} under-strand slots, expected 2", first)

    strand = nx.MultiGraph()
    strand.add_nodes_from(range(c))
    strand.add_edges_from((x.right, x.left) for x in diagram.crossings)
    whole = nx.Graph(strand)
    whole.add_edges_from((x.over, x.right) for x in diagram.crossings)
    if not nx.is_connected(whole):
        return _invalid('connected', "diagram is disconnected")
    if not nx.is_connected(strand):
        return _invalid('component', "under-strand arcs form more than one component (knots only)")
    return ValidationReport(True)


def _strip_comment(line):
    return line.split('#', 1)[0].strip()


def parse_triples(text, name=None):
    """Lee el formato ``X over right left`` (una línea por cruce, comentarios con #)"""
    triples = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        if tokens[0] != 'X':
            raise DiagramError(f"expected 'X' at start of crossing, got {tokens[0]!r}", line=number)
        if len(tokens) != 4:
            raise DiagramError(f"expected 3 arc ids, got {len(tokens) - 1}", line=number)
        try:
            triples.append(tuple(int(token) for token in tokens[1:]))
        except ValueError:
            raise DiagramError(f"invalid arc id in {line!r}", line=number) from None
    if not triples:
        raise DiagramError("no crossings")
    diagram = OrientedDiagram.from_triples(triples, name=name)
    validate(diagram).raise_if_invalid()
    return diagram


def serialize_triples(diagram):
    lines = [f"X {x.over} {x.right} {x.left}" for x in diagram.crossings]
    if diagram.name:
        lines.insert(0, f"# {diagram.name}")
    return '\n'.join(lines) + '\n'


PD_CROSSING = re.compile(r'X\[([^\]]*)\]')


def _blank(match):
    return re.sub(r'[^\n]', ' ', match.group(0))


def parse_oriented_pd(text, name=None):
    """Lee un código PD orientado ``X[a,b,c,d], ...`` con etiquetas 1..2c"""
    codes = []
    text = '\n'.join(raw.split('#', 1)[0] for raw in text.splitlines())
    for match in PD_CROSSING.finditer(text):
        line = text.count('\n', 0, match.start()) + 1
        tokens = [token for token in re.split(r'[\s,]+', match.group(1)) if token]
        if len(tokens) != 4:
            raise DiagramError(f"expected 4 edge labels, got {len(tokens)}", line=line)
        try:
            codes.append(tuple(int(token) for token in tokens))
        except ValueError:
            raise DiagramError(f"invalid edge label in {match.group(0)!r}", line=line) from None
    leftover = PD_CROSSING.sub(_blank, text)
    leftover = re.sub(r'\A\s*PD\[|\](?=\s*\Z)', _blank, leftover)
    stray = re.search(r'[^\s,]', leftover)
    if stray:
        line = leftover.count('\n', 0, stray.start()) + 1
        raise DiagramError(f"unexpected text {stray.group(0)!r} in PD code", line=line)
    return diagram_from_pd(codes, name=name)


def diagram_from_pd(codes, name=None):
    """
    Convierte cruces PD en ternas.

    En X[a,b,c,d] la arista a es la entrada por debajo y c = a+1 la salida.
    Si la hebra superior va de d a b el cruce es positivo y el arco entrante
    por debajo queda a la derecha; si va de b a d es negativo.
    """
    c = len(codes)
    if c == 0:
        raise DiagramError("no crossings")
    edges = 2 * c
    labels = Counter(label for code in codes for label in code)
    for label in sorted(labels):
        if not 1 <= label <= edges:
            raise DiagramError(f"edge label {label} out of range 1..{edges}")
    for label in range(1, edges + 1):
        if labels[label] != 2:
            raise DiagramError(f"edge label {label} must appear exactly twice, found {labels[label]}")

    components = nx.Graph()
    components.add_nodes_from(range(1, edges + 1))
    for a, b, out, d in codes:
        components.add_edge(a, out)
        components.add_edge(b, d)
    if nx.number_connected_components(components) > 1:
        raise DiagramError("knots only: PD code has more than one component")

    def successor(label):
        return label % edges + 1

    positive = []
    for index, (a, b, out, d) in enumerate(codes):
        if out != successor(a):
            raise DiagramError(f"inconsistent orientation at X[{a},{b},{out},{d}]", crossing=index)
        b_incoming = successor(b) == d and b != a
        d_incoming = successor(d) == b and d != a
        if b_incoming == d_incoming:
            raise DiagramError(f"inconsistent orientation at X[{a},{b},{out},{d}]", crossing=index)
        positive.append(d_incoming)

    starts = sorted(code[2] for code in codes)

    def arc_of(label):
        return (bisect_right(starts, label) - 1) % c

    triples = []
    for (a, b, out, d), sign in zip(codes, positive):
        over = arc_of(b)
        incoming, outgoing = arc_of(a), arc_of(out)
        triples.append((over, incoming, outgoing) if sign else (over, outgoing, incoming))
    diagram = OrientedDiagram.from_triples(triples, name=name)
    logger.debug("PD con %d cruces convertido a ternas %s", c, triples)
    validate(diagram).raise_if_invalid()
    return diagram


def pd_from_gauss(passes, signs):
    """
    Código PD a partir del recorrido del nudo.

    ``passes`` es la secuencia de pasos (cruce, por_arriba) en el orden de la
    orientación; la arista p sale del paso p. ``signs`` da el signo de cada
    cruce y fija el orden de los cruces en el resultado.
    """
    total = len(passes)
    under, over = {}, {}
    for position, (crossing, is_over) in enumerate(passes, start=1):
        (over if is_over else under)[crossing] = position
    if set(under) != set(signs) or set(over) != set(signs) or total != 2 * len(signs):
        raise DiagramError("each crossing must be passed once over and once under")

    def incoming(position):
        return position - 1 if position > 1 else total

    codes = []
    for crossing, sign in signs.items():
        pu, po = under[crossing], over[crossing]
        if sign > 0:
            codes.append((incoming(pu), po, pu, incoming(po)))
        else:
            codes.append((incoming(pu), incoming(po), pu, po))
    return codes


def diagram_to_json(diagram):
    data = {'crossings': [{'over': x.over, 'right': x.right, 'left': x.left} for x in diagram.crossings]}
    if diagram.name:
        data['name'] = diagram.name
    return data


def diagram_from_json(data):
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"invalid diagram JSON: {exc}") from exc
    try:
        triples = [(x['over'], x['right'], x['left']) for x in data['crossings']]
    except (KeyError, TypeError) as exc:
        raise DiagramError(f"diagram JSON needs crossings with over/right/left: {exc}") from exc
    diagram = OrientedDiagram.from_triples(triples, name=data.get('name'))
    validate(diagram).raise_if_invalid()
    return diagram


def detect_format(path):
    suffix = Path(path).suffix.lower()
    if suffix == '.pd':
        return 'pd'
    if suffix == '.tri':
        return 'triples'
    raise DiagramError(f"cannot infer diagram format from {Path(path).name!r}; use .tri or .pd")


def parse_diagram(text, fmt, name=None):
    if fmt == 'pd':
        return parse_oriented_pd(text, name=name)
    if fmt == 'triples':
        return parse_triples(text, name=name)
    raise DiagramError(f"unknown diagram format {fmt!r}")


def load_diagram(path, fmt='auto'):
    """Lee un archivo .tri o .pd (o el formato indicado)"""
    path = Path(path)
    if fmt == 'auto':
        fmt = detect_format(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise DiagramError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_diagram(text, fmt, name=path.stem)


def available_diagrams():
    """Nombres de los diagramas incluidos en diagramas/datos"""
    return sorted(path.stem for path in DATA_DIR.iterdir() if path.suffix in ('.tri', '.pd'))


def named_diagram(name):
    for suffix in ('.tri', '.pd'):
        path = DATA_DIR / f"{name}{suffix}"
        if path.exists():
            return load_diagram(path)
    raise DiagramError(f"unknown knot {name!r}; available: {', '.join(available_diagrams())}")
