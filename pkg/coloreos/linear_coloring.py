"""
Coloreos lineales (Z_n, l*k) por álgebra lineal entera exacta.

La matriz de relaciones se diagonaliza una vez por diagrama y parámetros
(l, k) con la forma normal de Smith; el número de coloreos módulo n sale
de los divisores elementales para cualquier n.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice, product
from math import gcd, prod

import numpy as np
from django.conf import settings
from sympy import primefactors

from cuandles.quandle_core import LinearQuandleParams
from diagramas.alexander import eval_mod

logger = logging.getLogger(__name__)


class ColoringLimitError(ValueError):
    """La cantidad de coloreos supera el límite pedido"""


@dataclass(frozen=True)
class RelationMatrixZ:
    """Matriz entera c×c: por cruce (o, r, l) suma l en r, k en l y -(l+k) en o"""
    rows: tuple

    @property
    def size(self):
        return len(self.rows)

    def reduce(self, n):
        return tuple(tuple(value % n for value in row) for row in self.rows)

    def as_array(self):
        return np.array(self.rows, dtype=object)


@dataclass(frozen=True)
class SNFResult:
    """Forma normal de Smith D = P·M·Q con P, Q unimodulares"""
    divisors: tuple
    left: tuple
    right: tuple

    def solution_count(self, n):
        """Cantidad de soluciones de M x = 0 mod n (gcd(0, n) = n)"""
        return prod(gcd(d, n) for d in self.divisors)

    @property
    def rank(self):
        return sum(1 for d in self.divisors if d)


@dataclass(frozen=True)
class Coloring:
    """Asignación arco -> Z_n que cumple la condición de cruce"""
    assignment: tuple
    params: LinearQuandleParams

    def is_valid(self, diagram):
        n, ell, k = self.params.n, self.params.ell, self.params.k
        phi = self.assignment
        return len(phi) == diagram.arc_count and all(
            (ell * phi[x.right] + k * phi[x.left] - (ell + k) * phi[x.over]) % n == 0
            for x in diagram.crossings
        )

    @property
    def is_trivial(self):
        return len(set(self.assignment)) <= 1

    def to_json(self):
        return list(self.assignment)


@dataclass(frozen=True)
class AlexanderWitness:
    colorable: bool
    p: int | None = None
    residue: int | None = None

    def __bool__(self):
        return self.colorable

    def to_json(self):
        witness = {'p': self.p, 'residue': self.residue} if self.colorable else None
        return {'colorable': self.colorable, 'witness': witness}


def _relation_rows(diagram, ell, k):
    c = diagram.arc_count
    rows = [[0] * c for _ in range(c)]
    for index, crossing in enumerate(diagram.crossings):
        row = rows[index]
        row[crossing.right] += ell
        row[crossing.left] += k
        row[crossing.over] -= ell + k
    return RelationMatrixZ(tuple(tuple(row) for row in rows))


def relation_matrix(diagram, params):
    return _relation_rows(diagram, params.ell, params.k)


def _identity(size):
    return [[int(i == j) for j in range(size)] for i in range(size)]


def _find_pivot(matrix, start):
    best = None
    for i in range(start, len(matrix)):
        for j in range(start, len(matrix[i])):
            value = abs(matrix[i][j])
            if value and (best is None or value < best[0]):
                best = (value, i, j)
    return best


def _swap_rows(matrix, i, j):
    matrix[i], matrix[j] = matrix[j], matrix[i]


def _swap_cols(matrix, i, j):
    for row in matrix:
        row[i], row[j] = row[j], row[i]


def _add_row(matrix, target, source, factor):
    matrix[target] = [a + factor * b for a, b in zip(matrix[target], matrix[source])]


def _add_col(matrix, target, source, factor):
    for row in matrix:
        row[target] += factor * row[source]


def smith_normal_form(matrix):
    """
    Forma normal de Smith con operaciones enteras exactas.

    Pivote: menor valor absoluto no nulo y, a igualdad, menor índice. Los
    divisores quedan no negativos, con la cadena de divisibilidad y los
    ceros al final.
    """
    a = [list(row) for row in matrix.rows]
    m = len(a)
    cols = len(a[0]) if m else 0
    left, right = _identity(m), _identity(cols)

    for t in range(min(m, cols)):
        pivot = _find_pivot(a, t)
        if pivot is None:
            break
        _, i, j = pivot
        _swap_rows(a, t, i)
        _swap_rows(left, t, i)
        _swap_cols(a, t, j)
        _swap_cols(right, t, j)

        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    factor = -(a[i][t] // a[t][t])
                    _add_row(a, i, t, factor)
                    _add_row(left, i, t, factor)
            for j in range(t + 1, cols):
                if a[t][j]:
                    factor = -(a[t][j] // a[t][t])
                    _add_col(a, j, t, factor)
                    _add_col(right, j, t, factor)

            remainders = [(abs(a[i][t]), i, None) for i in range(t + 1, m) if a[i][t]]
            remainders += [(abs(a[t][j]), None, j) for j in range(t + 1, cols) if a[t][j]]
            if remainders:
                # Un resto menor que el pivote pasa a ser el nuevo pivote
                _, i, j = min(remainders, key=lambda item: (item[0], item[1] or 0, item[2] or 0))
                if i is not None:
                    _swap_rows(a, t, i)
                    _swap_rows(left, t, i)
                else:
                    _swap_cols(a, t, j)
                    _swap_cols(right, t, j)
                continue

            offending = next(
                (i for i in range(t + 1, m) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if offending is None:
                break
            _add_row(a, t, offending, 1)
            _add_row(left, t, offending, 1)

        if a[t][t] < 0:
            a[t] = [-value for value in a[t]]
            left[t] = [-value for value in left[t]]

    size = max(m, cols)
    divisors = tuple(a[i][i] if i < min(m, cols) else 0 for i in range(size))
    return SNFResult(divisors, tuple(map(tuple, left)), tuple(map(tuple, right)))


@lru_cache(maxsize=256)
def _smith_for(diagram, ell, k):
    result = smith_normal_form(_relation_rows(diagram, ell, k))
    logger.debug("SNF de %s con (l, k) = (%d, %d): %s", diagram.name or 'diagrama', ell, k, result.divisors)
    return result


def diagram_smith_form(diagram, params):
    """SNF de la matriz entera, compartida por todos los módulos n"""
    return _smith_for(diagram, params.ell, params.k)


def coloring_count(diagram, params):
    return diagram_smith_form(diagram, params).solution_count(params.n)


def is_colorable(diagram, params):
    return coloring_count(diagram, params) > params.n


def colorable_by_alexander(delta, params):
    """Criterio: algún primo impar p | n con Δ(-l^-1 k) = 0 mod p"""
    for p in primefactors(params.n):
        if p == 2:
            continue
        residue = -(pow(params.ell, -1, p) * params.k) % p
        if eval_mod(delta, residue, p) == 0:
            return AlexanderWitness(True, p, residue)
    return AlexanderWitness(False)


def enumerate_colorings(diagram, params, limit=None, truncate=False):
    """
    Coloreos explícitos x = Q·y con d_i y_i = 0 mod n.

    Si hay más de ``limit`` soluciones y no se pidió truncar se lanza
    ColoringLimitError.
    """
    if limit is None:
        limit = getattr(settings, 'NUDOS_LIMITE_ENUMERACION', 1000)
    snf = diagram_smith_form(diagram, params)
    n = params.n
    total = snf.solution_count(n)
    if total > limit and not truncate:
        raise ColoringLimitError(f"{total} colorings exceed the limit of {limit}")

    c = diagram.arc_count
    steps = [n // gcd(d, n) for d in snf.divisors[:c]]
    choices = [range(0, n, step) for step in steps]
    right = snf.right
    colorings = []
    for y in islice(product(*choices), limit):
        x = tuple(sum(right[i][j] * y[j] for j in range(c)) % n for i in range(c))
        colorings.append(Coloring(x, params))
    return sorted(colorings, key=lambda coloring: coloring.assignment)


def brute_force_coloring_count(diagram, params, max_assignments=None):
    """Oráculo exhaustivo: revisa las n^c asignaciones con numpy"""
    n, c = params.n, diagram.arc_count
    if max_assignments is None:
        max_assignments = getattr(settings, 'NUDOS_MAX_FUERZA_BRUTA', 2_000_000)
    if n ** c > max_assignments:
        raise ColoringLimitError(f"exhaustive search over {n}^{c} assignments exceeds {max_assignments}")
    grid = np.indices((n,) * c).reshape(c, -1)
    ok = np.ones(grid.shape[1], dtype=bool)
    for x in diagram.crossings:
        ok &= (params.ell * grid[x.right] + params.k * grid[x.left] - (params.ell + params.k) * grid[x.over]) % n == 0
    return int(ok.sum())


def lift_coloring(coloring, m):
    """Para n | m, φ -> (m/n)φ es un (Z_m, l*k)-coloreo con la misma cantidad de colores"""
    n = coloring.params.n
    if m % n:
        raise ValueError(f"{n} does not divide {m}")
    params = LinearQuandleParams(m, coloring.params.ell, coloring.params.k)
    return Coloring(tuple(value * (m // n) for value in coloring.assignment), params)


def project_coloring(coloring, p):
    """Reduce un coloreo módulo un divisor p de n"""
    if coloring.params.n % p:
        raise ValueError(f"{p} does not divide {coloring.params.n}")
    params = LinearQuandleParams(p, coloring.params.ell % p, coloring.params.k % p)
    return Coloring(tuple(value % p for value in coloring.assignment), params)
