"""
Cuandles finitos representados por su tabla de operación.

Incluye los cuandles lineales (Z_n, l*k), el cuandle tetraedral S4, el
catálogo de cuandles indescomponibles de orden 3 a 7, la verificación de
axiomas, la descomposición en órbitas y las pruebas de isomorfismo.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations, product
from math import gcd

import networkx as nx
import numpy as np
from django.conf import settings
from sympy import Poly, symbols

logger = logging.getLogger(__name__)

T = symbols('t')


class QuandleError(ValueError):
    """Error base de los cuandles"""


class ParameterError(QuandleError):
    """Parámetros (n, l, k) fuera de las condiciones de coprimalidad"""


class MalformedTableError(QuandleError):
    """Tabla que no es cuadrada o no tiene entradas enteras"""


@dataclass(frozen=True)
class LinearQuandleParams:
    """Parámetros del cuandle lineal (Z_n, l*k)"""
    n: int
    ell: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError(f"modulus n must be >= 2, got {self.n}")
        if self.ell < 1 or self.k < 1:
            raise ParameterError(f"ell and k must be positive, got ell={self.ell}, k={self.k}")
        if gcd(self.n, self.k) != 1:
            raise ParameterError(f"gcd(n, k) must be 1, got gcd({self.n}, {self.k}) = {gcd(self.n, self.k)}")
        if gcd(self.n, self.ell) != 1:
            raise ParameterError(f"gcd(n, ell) must be 1, got gcd({self.n}, {self.ell}) = {gcd(self.n, self.ell)}")

    @property
    def ell_inv(self):
        return pow(self.ell, -1, self.n)

    @property
    def k_inv(self):
        return pow(self.k, -1, self.n)

    @property
    def ratio(self):
        """Invariante l * k^-1 mod n que decide la clase de isomorfismo lineal"""
        return self.ell * self.k_inv % self.n

    @property
    def name(self):
        return f"Z{self.n}_{self.ell}x{self.k}"

    @property
    def label(self):
        return f"(Z{self.n},{self.ell}*{self.k})"


@dataclass(frozen=True)
class OrbitDecomposition:
    orbit_count: int
    orbits: tuple

    def to_json(self):
        return {'orbit_count': self.orbit_count, 'orbits': [list(orbit) for orbit in self.orbits]}


@dataclass(frozen=True)
class AxiomReport:
    """Resultado de verificar los tres axiomas sobre una tabla"""
    passed: bool
    malformed: bool = False
    axiom: int | None = None
    witness: tuple | None = None

    @property
    def message(self):
        if self.passed:
            return "quandle axioms hold"
        if self.malformed:
            a, b = self.witness
            return f"malformed table: entry ({a}, {b}) out of range"
        return f"axiom ({self.axiom}) fails at {self.witness}"

    def __bool__(self):
        return self.passed


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    """Cuandle finito: table[a][b] = a*b sobre los elementos 0..q-1"""
    table: np.ndarray
    name: str | None = None
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        try:
            table = np.array(self.table, dtype=np.int64)
        except (TypeError, ValueError) as exc:
            raise MalformedTableError(f"table entries must be integers: {exc}") from exc
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise MalformedTableError(f"table must be a non-empty square array, got shape {table.shape}")
        table.setflags(write=False)
        object.__setattr__(self, 'table', table)

    @property
    def order(self):
        return int(self.table.shape[0])

    @property
    def display_name(self):
        return self.label or self.name or f"Q{self.order}"

    def operate(self, a, b):
        return int(self.table[a, b])

    @cached_property
    def inverse_table(self):
        """inverse_table[c][b] = el único a con a*b = c (requiere el axioma 2)"""
        q = self.order
        inverse = np.empty_like(self.table)
        columns = np.broadcast_to(np.arange(q)[None, :], (q, q))
        inverse[self.table, columns] = np.arange(q)[:, None]
        inverse.setflags(write=False)
        return inverse

    def rows(self):
        return self.table.tolist()

    def __eq__(self, other):
        if not isinstance(other, FiniteQuandle):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteQuandle(order={self.order}, name={self.name!r})"


def make_linear_quandle(params):
    """Construye la tabla a*b = ((l+k)b - l a) k^-1 mod n"""
    n = params.n
    ell, k, k_inv = params.ell % n, params.k % n, params.k_inv
    a = np.arange(n, dtype=np.int64)[:, None]
    b = np.arange(n, dtype=np.int64)[None, :]
    table = (((ell + k) * b - ell * a) % n) * k_inv % n
    return FiniteQuandle(table, name=params.name, label=params.label)


def canonical_params(params):
    """Representante canónico (n, 1, l^-1 k) de la clase de coloreos"""
    return LinearQuandleParams(params.n, 1, params.ell_inv * params.k % params.n)


def verify_quandle_axioms(quandle):
    """Verifica los tres axiomas y devuelve el primer testigo en orden lexicográfico"""
    table = quandle.table
    q = quandle.order
    out_of_range = np.argwhere((table < 0) | (table >= q))
    if len(out_of_range):
        return AxiomReport(False, malformed=True, witness=tuple(int(v) for v in out_of_range[0]))

    elements = np.arange(q)
    idempotent = np.flatnonzero(table[elements, elements] != elements)
    if len(idempotent):
        return AxiomReport(False, axiom=1, witness=(int(idempotent[0]),))

    # Pares a < a' con a*b = a'*b
    collisions = (table[:, None, :] == table[None, :, :]) & np.triu(np.ones((q, q), dtype=bool), k=1)[:, :, None]
    witnesses = np.argwhere(collisions)
    if len(witnesses):
        return AxiomReport(False, axiom=2, witness=tuple(int(v) for v in witnesses[0]))

    left = table[table[:, :, None], elements[None, None, :]]
    right = table[table[:, None, :], table[None, :, :]]
    witnesses = np.argwhere(left != right)
    if len(witnesses):
        return AxiomReport(False, axiom=3, witness=tuple(int(v) for v in witnesses[0]))
    return AxiomReport(True)


def orbit_components(quandle):
    """Órbitas de la acción por traslaciones a derecha, calculadas con networkx"""
    q = quandle.order
    graph = nx.Graph()
    graph.add_nodes_from(range(q))
    for a, x in product(range(q), repeat=2):
        graph.add_edge(a, int(quandle.table[a, x]))
    return sorted(tuple(sorted(component)) for component in nx.connected_components(graph))


def orbit_decomposition(params):
    """Descomposición de (Z_n, l*k) en d = gcd(n, l+k) órbitas C_i = {i, d+i, ...}"""
    d = gcd(params.n, params.ell + params.k)
    orbits = tuple(tuple(range(i, params.n, d)) for i in range(d))
    return OrbitDecomposition(d, orbits)


def orbit_subquandle(params, index):
    """Restringe el cuandle a la órbita C_index, renombrando md+i como m"""
    decomposition = orbit_decomposition(params)
    orbit = decomposition.orbits[index]
    d = decomposition.orbit_count
    full = make_linear_quandle(params).table
    table = [[int(full[a, b]) // d for b in orbit] for a in orbit]
    return FiniteQuandle(table, name=f"{params.name}_orbit{index}")


def linear_isomorphic_sufficient(p1, p2):
    """Condición suficiente de isomorfismo: l1 k1^-1 = l2 k2^-1 mod n"""
    if p1.n != p2.n:
        raise ParameterError(f"modulus mismatch: {p1.n} != {p2.n}")
    return p1.ratio == p2.ratio


def is_homomorphism(mapping, q1, q2):
    """True si f(a*b) = f(a)*'f(b) para todo par a, b"""
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (q1.order,):
        raise QuandleError(f"map must assign one element to each of the {q1.order} elements")
    if f.min() < 0 or f.max() >= q2.order:
        raise QuandleError("map image out of range")
    return bool(np.array_equal(f[q1.table], q2.table[f[:, None], f[None, :]]))


def _generating_set(quandle):
    table = quandle.table
    generators = []
    closure = set()
    for a in range(quandle.order):
        if a in closure:
            continue
        generators.append(a)
        closure.add(a)
        frontier = True
        while frontier:
            frontier = False
            for x, y in product(list(closure), repeat=2):
                value = int(table[x, y])
                if value not in closure:
                    closure.add(value)
                    frontier = True
    return generators


def _extend_morphism(assignment, q1, q2):
    image = dict(assignment)
    used = set(image.values())
    changed = True
    while changed:
        changed = False
        for a, b in product(list(image), repeat=2):
            source = int(q1.table[a, b])
            target = int(q2.table[image[a], image[b]])
            if source in image:
                if image[source] != target:
                    return None
            elif target in used:
                return None
            else:
                image[source] = target
                used.add(target)
                changed = True
    return image


def brute_force_isomorphic(q1, q2, max_order=None):
    """Busca un isomorfismo fijando la imagen de un conjunto generador y propagando"""
    if q1.order != q2.order:
        return False
    if max_order is None:
        max_order = getattr(settings, 'NUDOS_MAX_ORDEN_ISOMORFISMO', 10)
    if q1.order > max_order:
        raise QuandleError(f"brute-force isomorphism is capped at order {max_order}, got {q1.order}")

    generators = _generating_set(q1)
    logger.debug("isomorfismo %s vs %s con %d generadores", q1.display_name, q2.display_name, len(generators))
    for images in permutations(range(q2.order), len(generators)):
        image = _extend_morphism(zip(generators, images), q1, q2)
        if image is None or len(image) != q1.order:
            continue
        mapping = [image[a] for a in range(q1.order)]
        if is_homomorphism(mapping, q1, q2):
            return True
    return False


def make_polynomial_alexander_quandle(p, modulus, name=None, label=None):
    """
    Cuandle de Alexander Z_p[t, t^-1]/(f) con a*b = t a + (1 - t) b.

    ``modulus`` son los coeficientes de f de mayor a menor grado; f debe ser
    mónico y con término constante no nulo mod p. Un elemento c_0 + c_1 t + ...
    se codifica como el entero c_0 + c_1 p + c_2 p^2 + ...
    """
    f = Poly(list(modulus), T, modulus=p)
    degree = f.degree()
    if degree < 1 or int(f.LC()) % p != 1 or int(f.eval(0)) % p == 0:
        raise ParameterError(f"modulus must be monic with nonzero constant term mod {p}")

    order = p ** degree

    def decode(index):
        digits = [(index // p ** i) % p for i in range(degree)]
        return Poly(list(reversed(digits)), T, modulus=p)

    def encode(poly):
        coefficients = [int(c) % p for c in reversed(poly.all_coeffs())]
        return sum(c * p ** i for i, c in enumerate(coefficients))

    elements = [decode(i) for i in range(order)]
    t = Poly(T, T, modulus=p)
    one_minus_t = Poly(1 - T, T, modulus=p)
    table = [[encode((t * a + one_minus_t * b).rem(f)) for b in elements] for a in elements]
    return FiniteQuandle(table, name=name, label=label)


def make_tetrahedron_quandle():
    """Cuandle tetraedral S4 = Z_2[t, t^-1]/(t^2 + t + 1) con 0, 1, t, 1+t -> 0..3"""
    return make_polynomial_alexander_quandle(2, (1, 1, 1), name='S4', label='S4')


# Matrices de QS6 y QS6' con etiquetas 1..6
QS6_MATRIX = (
    (1, 1, 5, 6, 3, 4),
    (2, 2, 6, 5, 4, 3),
    (5, 6, 3, 3, 1, 2),
    (6, 5, 4, 4, 2, 1),
    (3, 4, 1, 2, 5, 5),
    (4, 3, 2, 1, 6, 6),
)

QS6P_MATRIX = (
    (1, 1, 6, 5, 3, 4),
    (2, 2, 5, 6, 4, 3),
    (5, 6, 3, 3, 2, 1),
    (6, 5, 4, 4, 1, 2),
    (4, 3, 1, 2, 5, 5),
    (3, 4, 2, 1, 6, 6),
)

# Homomorfismo QS6 -> (Z3, 1*1) que identifica los pares {0,1}, {2,3}, {4,5}
QS6_TO_Z3 = (0, 0, 1, 1, 2, 2)


def shift_one_based(rows):
    """Pasa una matriz escrita con etiquetas 1..q a etiquetas 0..q-1"""
    return tuple(tuple(entry - 1 for entry in row) for row in rows)


def _linear(n, k):
    return make_linear_quandle(LinearQuandleParams(n, 1, k))


CATALOG = {
    'Z3_1x1': lambda: _linear(3, 1),
    'S4': make_tetrahedron_quandle,
    'Z5_1x1': lambda: _linear(5, 1),
    'Z5_1x2': lambda: _linear(5, 2),
    'Z5_1x3': lambda: _linear(5, 3),
    'QS6': lambda: FiniteQuandle(shift_one_based(QS6_MATRIX), name='QS6', label='QS6'),
    'QS6p': lambda: FiniteQuandle(shift_one_based(QS6P_MATRIX), name='QS6p', label="QS6'"),
    'Z7_1x1': lambda: _linear(7, 1),
    'Z7_1x2': lambda: _linear(7, 2),
    'Z7_1x3': lambda: _linear(7, 3),
    'Z7_1x4': lambda: _linear(7, 4),
    'Z7_1x5': lambda: _linear(7, 5),
}

CATALOG_BY_ORDER = {
    3: ('Z3_1x1',),
    4: ('S4',),
    5: ('Z5_1x1', 'Z5_1x2', 'Z5_1x3'),
    6: ('QS6', 'QS6p'),
    7: ('Z7_1x1', 'Z7_1x2', 'Z7_1x3', 'Z7_1x4', 'Z7_1x5'),
}


def catalog_names():
    return list(CATALOG)


@lru_cache(maxsize=None)
def catalog_quandle(name):
    """Devuelve el cuandle del catálogo con ese nombre"""
    try:
        return CATALOG[name]()
    except KeyError:
        raise QuandleError(f"unknown quandle {name!r}; expected one of {', '.join(CATALOG)}") from None


def catalog_indecomposable(order):
    """Cuandles indescomponibles del orden dado (3..7)"""
    if order not in CATALOG_BY_ORDER:
        raise QuandleError(f"catalog covers orders 3..7, got {order}")
    return [catalog_quandle(name) for name in CATALOG_BY_ORDER[order]]


def quandle_to_json(quandle):
    return {'order': quandle.order, 'table': quandle.rows(), 'name': quandle.name}


def quandle_from_json(data):
    """Acepta un dict o un texto JSON {"order": q, "table": [...], "name": ...}"""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise MalformedTableError(f"invalid quandle JSON: {exc}") from exc
    if not isinstance(data, dict) or 'table' not in data:
        raise MalformedTableError("quandle JSON must be an object with a 'table' entry")
    quandle = FiniteQuandle(data['table'], name=data.get('name'))
    if 'order' in data and data['order'] != quandle.order:
        raise MalformedTableError(f"declared order {data['order']} does not match table size {quandle.order}")
    return quandle
