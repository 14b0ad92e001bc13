"""
Búsquedas finitas sobre coloreos.

- Colorabilidad lineal n por el polinomio de Alexander y orden lineal mínimo
  con la cota explícita de terminación.
- Coloreos por un cuandle finito arbitrario con backtracking y propagación.
- Orden mínimo de cuandle sobre el catálogo de órdenes 3 a 7.
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd

import numpy as np
from django.conf import settings
from sympy import Poly, primefactors, symbols

from cuandles.quandle_core import CATALOG_BY_ORDER, catalog_quandle
from diagramas.alexander import ONE, eval_mod

logger = logging.getLogger(__name__)

GEQ8 = 'geq8'
GEQ8_TEXT = "≥ 8 (relative to the order-≤7 catalog)"

# Pares (Z_p, 1*k) <-> (Z_p, 1*k^-1) que deben coincidir siempre
INVERSE_PAIRS = (('Z5_1x3', 'Z5_1x2'), ('Z7_1x4', 'Z7_1x2'), ('Z7_1x5', 'Z7_1x3'))


class ColorabilityError(ValueError):
    """No existe cota de colorabilidad (Δ = 1)"""


class SearchScaleError(ValueError):
    """El diagrama excede la cota de arcos del backtracking"""


class ConsistencyError(RuntimeError):
    """Un chequeo matemático que siempre debe cumplirse falló"""


@dataclass(frozen=True)
class Witness:
    p: int
    k: int

    def to_json(self):
        return {'p': self.p, 'k': self.k}


@dataclass(frozen=True)
class LinearColorabilityVerdict:
    colorable: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.colorable

    def to_json(self):
        return {'colorable': self.colorable, 'witness': self.witness.to_json() if self.witness else None}


@dataclass(frozen=True)
class BoundConstruction:
    k: int
    n_bound: int


@dataclass(frozen=True)
class MinOrderResult:
    """Orden mínimo (lineal o de cuandle) con su testigo"""
    mode: str
    order: int | str
    witness: Witness | None = None
    witness_quandle: str | None = None
    witness_label: str | None = None

    @property
    def is_geq8(self):
        return self.order == GEQ8

    def to_json(self):
        if self.mode == 'linear':
            return {'min_order': self.order, 'witness': self.witness.to_json()}
        return {'min_order': self.order, 'witness_quandle': self.witness_quandle}

    def __str__(self):
        if self.is_geq8:
            return GEQ8_TEXT
        if self.mode == 'linear':
            return f"{self.order} (Z{self.witness.p},1*{self.witness.k})"
        return f"{self.order} ({self.witness_label})"


@lru_cache(maxsize=4096)
def _first_root(delta, p):
    for k in range(1, p):
        if eval_mod(delta, -k, p) == 0:
            return k
    return None


def is_linear_n_colorable(delta, n):
    """Primer testigo (p, k) con p primo impar, p | n y Δ(-k) = 0 mod p"""
    for p in primefactors(n):
        if p == 2:
            continue
        k = _first_root(delta, p)
        if k is not None:
            return LinearColorabilityVerdict(True, Witness(p, k))
    return LinearColorabilityVerdict(False)


def colorability_bound(delta):
    """Menor k con gcd(k, a_0) = 1 y k >= max |a_i / a_d| + 1; la cota es n = |Δ(-k)|"""
    if delta == ONE or delta.span < 1:
        raise ColorabilityError("no bound exists; knot may not be linearly colorable")
    coeffs = delta.coeffs
    d = delta.span
    middle = range(1, d) if d > 1 else range(0)
    ratio = max((Fraction(abs(coeffs[i]), abs(coeffs[d])) for i in middle), default=Fraction(0))
    k = max(ceil(ratio + 1), 1)
    while gcd(k, coeffs[0]) != 1:
        k += 1
    n_bound = abs(delta(-k))
    if n_bound % 2 == 0 or gcd(n_bound, k) != 1 or n_bound <= k + 1:
        raise ConsistencyError(f"bound construction failed for {delta}: k={k}, n={n_bound}")
    return BoundConstruction(k, n_bound)


def minimal_linear_order(delta):
    """Recorre n = 3, 4, 5, ... hasta el primer n linealmente colorable"""
    bound = colorability_bound(delta)
    for n in range(3, bound.n_bound + 1):
        verdict = is_linear_n_colorable(delta, n)
        if verdict:
            logger.debug("orden lineal mínimo de %s: %d (cota %d)", delta, n, bound.n_bound)
            return MinOrderResult('linear', n, witness=verdict.witness)
    raise ConsistencyError(f"no linear coloring found up to the bound {bound.n_bound} for {delta}")


def _arc_order(diagram):
    """Arcos en orden BFS desde el arco 0 por adyacencia de cruces"""
    c = diagram.arc_count
    neighbours = [set() for _ in range(c)]
    for x in diagram.crossings:
        arcs = {x.over, x.right, x.left}
        for arc in arcs:
            neighbours[arc] |= arcs - {arc}
    order, seen = [], {0}
    queue = deque([0])
    while queue:
        arc = queue.popleft()
        order.append(arc)
        for other in sorted(neighbours[arc]):
            if other not in seen:
                seen.add(other)
                queue.append(other)
    order.extend(arc for arc in range(c) if arc not in seen)
    return order


def iter_quandle_colorings(diagram, quandle, max_arcs=None):
    """
    Genera los coloreos ψ con ψ(right) * ψ(over) = ψ(left) en cada cruce.

    Cada cruce con dos arcos coloreados fuerza o filtra el tercero: over y
    right dan left por la tabla; over y left dan right por la columna inversa.
    """
    c = diagram.arc_count
    if max_arcs is None:
        max_arcs = getattr(settings, 'NUDOS_MAX_ARCOS_BUSQUEDA', 60)
    if c > max_arcs:
        raise SearchScaleError(f"diagram has {c} arcs, search is capped at {max_arcs}")

    table = quandle.table.tolist()
    inverse = quandle.inverse_table.tolist()
    q = quandle.order
    crossings = [x.as_tuple() for x in diagram.crossings]
    incident = [[] for _ in range(c)]
    for index, (o, r, l) in enumerate(crossings):
        for arc in {o, r, l}:
            incident[arc].append(index)
    order = _arc_order(diagram)

    def propagate(colors, arc):
        pending = [arc]
        while pending:
            current = pending.pop()
            for index in incident[current]:
                o, r, l = crossings[index]
                co, cr, cl = colors[o], colors[r], colors[l]
                if co is None:
                    continue
                if cr is not None:
                    target, value = l, table[cr][co]
                elif cl is not None:
                    target, value = r, inverse[cl][co]
                else:
                    continue
                if colors[target] is None:
                    colors[target] = value
                    pending.append(target)
                elif colors[target] != value:
                    return False
        return True

    def search(position, colors):
        while position < c and colors[order[position]] is not None:
            position += 1
        if position == c:
            yield tuple(colors)
            return
        arc = order[position]
        for value in range(q):
            candidate = list(colors)
            candidate[arc] = value
            if propagate(candidate, arc):
                yield from search(position + 1, candidate)

    yield from search(0, [None] * c)


def quandle_coloring_count(diagram, quandle, max_arcs=None):
    return sum(1 for _ in iter_quandle_colorings(diagram, quandle, max_arcs))


def is_quandle_colorable(diagram, quandle, max_arcs=None):
    return find_nontrivial_coloring(diagram, quandle, max_arcs) is not None


def find_nontrivial_coloring(diagram, quandle, max_arcs=None):
    """Primer coloreo no constante, o None"""
    for coloring in iter_quandle_colorings(diagram, quandle, max_arcs):
        if len(set(coloring)) > 1:
            return coloring
    return None


def brute_force_quandle_count(diagram, quandle, max_assignments=None):
    """Oráculo exhaustivo sobre las q^c asignaciones"""
    q, c = quandle.order, diagram.arc_count
    if max_assignments is None:
        max_assignments = getattr(settings, 'NUDOS_MAX_FUERZA_BRUTA', 2_000_000)
    if q ** c > max_assignments:
        raise SearchScaleError(f"exhaustive search over {q}^{c} assignments exceeds {max_assignments}")
    grid = np.indices((q,) * c).reshape(c, -1)
    ok = np.ones(grid.shape[1], dtype=bool)
    for x in diagram.crossings:
        ok &= quandle.table[grid[x.right], grid[x.over]] == grid[x.left]
    return int(ok.sum())


def compose_coloring(coloring, mapping):
    """Imagen de un coloreo por un homomorfismo de cuandles"""
    return tuple(int(mapping[value]) for value in coloring)


def s4_colorable_by_alexander(delta):
    """S4-colorable sii Δ se anula en Z_2[t]/(t^2 + t + 1)"""
    t = symbols('t')
    reduced = Poly(list(reversed(delta.coeffs)), t, modulus=2).rem(Poly(t**2 + t + 1, t, modulus=2))
    return reduced.is_zero


def minimal_quandle_order(diagram, max_arcs=None):
    """Escalera de órdenes 3, 4, 5, 6, 7 sobre el catálogo; '≥ 8' si ninguno colorea"""
    hits = {}
    for order in sorted(CATALOG_BY_ORDER):
        for name in CATALOG_BY_ORDER[order]:
            coloring = find_nontrivial_coloring(diagram, catalog_quandle(name), max_arcs)
            hits[name] = coloring is not None
        for name, partner in INVERSE_PAIRS:
            if name in hits and partner in hits and hits[name] != hits[partner]:
                raise ConsistencyError(f"{name} and {partner} disagree on {diagram.name or 'diagram'}")
        winners = [name for name in CATALOG_BY_ORDER[order] if hits[name]]
        if order == 6 and winners:
            # Todo coloreo por QS6 o QS6' se proyecta a un 3-coloreo no trivial
            raise ConsistencyError(f"{winners[0]} colors {diagram.name or 'the diagram'} but (Z3,1*1) does not")
        logger.debug("orden %d: colorean %s", order, winners or 'ninguno')
        if winners:
            quandle = catalog_quandle(winners[0])
            return MinOrderResult('quandle', order, witness_quandle=winners[0], witness_label=quandle.display_name)
    return MinOrderResult('quandle', GEQ8)
