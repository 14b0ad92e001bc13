"""
Nudos twist: generador de diagramas, polinomio de Alexander cerrado,
predicados de colorabilidad por residuos y clasificador del orden mínimo
de cuandle.

El nudo twist de c cruces se arma como el pretzel P(c-2, 1, 1): c-2 cruces
verticales de torsión más las dos del broche.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from sympy import isprime

from cuandles.quandle_core import ParameterError, catalog_quandle
from diagramas.alexander import LaurentPoly
from diagramas.diagram import diagram_from_pd, pd_from_gauss

from .coloring_search import GEQ8

logger = logging.getLogger(__name__)

# Familias (r, s): c = 10(6q + r) + s y c = 14(30q + r) + s
FIVE_FAMILIES = (
    ((1, 3), (4, 7)),
    ((2, 4), (6, 9)),
)
SEVEN_FAMILIES = (
    ((0, 4, 10, 12, 22, 24), (5,)),
    ((1, 3, 13, 15, 21, 25), (11,)),
    ((4, 8, 14, 16, 26, 28), (6,)),
    ((5, 7, 13, 17, 23, 25), (0, 3)),
    ((5, 7, 17, 19, 25, 29), (12,)),
)
FIVE_WITNESS = {4: 'Z5_1x1', 9: 'Z5_1x1', 6: 'Z5_1x2', 7: 'Z5_1x2'}
SEVEN_WITNESS = {5: 'Z7_1x1', 12: 'Z7_1x1', 0: 'Z7_1x2', 3: 'Z7_1x2', 6: 'Z7_1x3', 11: 'Z7_1x3'}
S4_RESIDUES_MOD_12 = frozenset({4, 7, 8, 11})


@dataclass(frozen=True)
class TwistKnot:
    c: int

    def __post_init__(self):
        if self.c < 3:
            raise ParameterError(f"twist knots need c >= 3, got {self.c}")

    @property
    def m(self):
        """Cantidad de cruces de torsión"""
        return self.c - 2

    @property
    def is_even(self):
        return self.c % 2 == 0

    @property
    def p(self):
        return self.c // 2 if self.is_even else (self.c - 1) // 2


@dataclass(frozen=True)
class TwistVerdict:
    c: int
    q_value: int | str
    witness: str | None = None

    @property
    def witness_label(self):
        return catalog_quandle(self.witness).display_name if self.witness else None

    @property
    def q_text(self):
        return "≥8" if self.q_value == GEQ8 else str(self.q_value)

    def to_json(self):
        return {'c': self.c, 'q_value': self.q_value, 'witness': self.witness}

    def __str__(self):
        if self.witness is None:
            return f"c={self.c}, q={self.q_text}"
        return f"c={self.c}, q={self.q_text}, witness {self.witness_label}"


@dataclass(frozen=True)
class TwistLinearVerdict:
    colorable: bool
    iff_guaranteed: bool

    def __bool__(self):
        return self.colorable


def _twist_passes(c):
    """Recorrido (cruce, por_arriba) y signos de los cruces del pretzel P(c-2, 1, 1)"""
    m = TwistKnot(c).m
    up = [(('A', i), i % 2 == 1) for i in range(1, m + 1)]
    down = [(('A', i), i % 2 == 0) for i in range(m, 0, -1)]
    signs = {('A', i): -1 for i in range(1, m + 1)}
    if m % 2 == 0:
        passes = up + [('C', True), ('B', False)] + down + [('B', True), ('C', False)]
        signs.update({'B': 1, 'C': 1})
    else:
        passes = up + [('B', False), ('C', True)] + down + [('B', True), ('C', False)]
        signs.update({'B': -1, 'C': -1})
    return passes, signs


def twist_pd(c):
    """Código PD orientado del nudo twist de c cruces"""
    passes, signs = _twist_passes(c)
    return pd_from_gauss(passes, signs)


@lru_cache(maxsize=128)
def twist_diagram(c):
    return diagram_from_pd(twist_pd(c), name=f"twist-{c}")


def twist_alexander(c):
    """-(c-2)/2 t^2 + (c-1) t - (c-2)/2 para c par; (c-1)/2 t^2 - (c-2) t + (c-1)/2 para c impar"""
    knot = TwistKnot(c)
    if knot.is_even:
        edge = -(c - 2) // 2
        return LaurentPoly((edge, c - 1, edge))
    edge = (c - 1) // 2
    return LaurentPoly((edge, -(c - 2), edge))


def twist_linear_colorable(c, n, k):
    """
    Residuo de p = c/2 (par) o (c-1)/2 (impar) módulo n.

    Par: (k+1)^2 p = k^2 + k + 1 (mod n); impar: (k+1)^2 p = k (mod n).
    Sólo para n primo la condición es también necesaria.
    """
    knot = TwistKnot(c)
    if n < 2 or k < 1:
        raise ParameterError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    if gcd(n, k) != 1:
        raise ParameterError(f"gcd(n, k) must be 1, got gcd({n}, {k}) = {gcd(n, k)}")
    if (k + 1) % n == 0:
        raise ParameterError(f"n must not divide k + 1 (n={n}, k={k})")
    target = k * k + k + 1 if knot.is_even else k
    colorable = ((k + 1) ** 2 * knot.p - target) % n == 0
    return TwistLinearVerdict(colorable, iff_guaranteed=bool(isprime(n)))


def twist_s4_colorable(c):
    TwistKnot(c)
    return c % 4 in (0, 3)


def expand_five_families():
    """Residuos de c mod 60 con c = 10(6q + r) + s"""
    return {10 * r + s: FIVE_WITNESS[s] for rs, ss in FIVE_FAMILIES for r in rs for s in ss}


def expand_seven_families():
    """Residuos de c mod 420 con c = 14(30q + r) + s"""
    return {14 * r + s: SEVEN_WITNESS[s] for rs, ss in SEVEN_FAMILIES for r in rs for s in ss}


FIVE_RESIDUES = expand_five_families()
SEVEN_RESIDUES = expand_seven_families()


def literal_family_match(c, modulus, families, witnesses):
    """Busca (q, r, s) literal con c = b(a q + r) + s; devuelve el testigo o None"""
    base, period = {60: (10, 6), 420: (14, 30)}[modulus]
    for rs, ss in families:
        for r in rs:
            for s in ss:
                q, rest = divmod(c - s - base * r, base * period)
                if rest == 0 and q >= 0:
                    return witnesses[s]
    return None


def twist_min_quandle_order(c):
    """Clasificador cerrado de q(L) para el nudo twist de c cruces"""
    TwistKnot(c)
    if c % 3 == 0:
        return TwistVerdict(c, 3, 'Z3_1x1')
    if c % 12 in S4_RESIDUES_MOD_12:
        return TwistVerdict(c, 4, 'S4')
    if c % 60 in FIVE_RESIDUES:
        return TwistVerdict(c, 5, FIVE_RESIDUES[c % 60])
    if c % 420 in SEVEN_RESIDUES:
        return TwistVerdict(c, 7, SEVEN_RESIDUES[c % 420])
    return TwistVerdict(c, GEQ8)


def twist_table(first, last):
    """Filas (c, Δ, veredicto) para c en first..last"""
    rows = []
    for c in range(first, last + 1):
        rows.append((c, twist_alexander(c), twist_min_quandle_order(c)))
    logger.debug("tabla twist %d..%d con %d filas", first, last, len(rows))
    return rows
