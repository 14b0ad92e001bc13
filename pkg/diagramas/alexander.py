"""
Polinomio de Alexander a partir de la matriz de relaciones de cruce sobre Z[t].

El determinante del menor se calcula con eliminación sin fracciones (Bareiss)
de sympy sobre el anillo ZZ[t]; los coeficientes son enteros de precisión
arbitraria en todo momento.
"""

import logging
from dataclasses import dataclass
from itertools import zip_longest

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring

from .diagram import validate

logger = logging.getLogger(__name__)

RING, T = ring('t', ZZ)
DOMAIN = RING.to_domain()

MAX_COFACTOR_SIZE = 8


class AlexanderError(ValueError):
    """El diagrama no produce un polinomio de nudo"""


@dataclass(frozen=True)
class LaurentPoly:
    """
    Polinomio de Laurent con coeficientes enteros.

    ``coeffs[i]`` es el coeficiente de t^(low + i); una vez normalizado
    low = 0 y coeffs[0] es el término constante.
    """
    coeffs: tuple
    low: int = 0

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        low = self.low
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            low += 1
        object.__setattr__(self, 'coeffs', tuple(coeffs))
        object.__setattr__(self, 'low', low if coeffs else 0)

    @classmethod
    def from_terms(cls, terms):
        """Construye desde un dict exponente -> coeficiente"""
        terms = {int(e): int(c) for e, c in terms.items() if c}
        if not terms:
            return cls(())
        low = min(terms)
        return cls(tuple(terms.get(low + i, 0) for i in range(max(terms) - low + 1)), low)

    @classmethod
    def from_ring_element(cls, element):
        return cls.from_terms({monomial[0]: coeff for monomial, coeff in element.items()})

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Grado del término más alto (con low = 0 es el grado d del polinomio)"""
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    @property
    def span(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Evaluación entera exacta (t = x); requiere x != 0 si hay potencias negativas"""
        value = 0
        for coeff in reversed(self.coeffs):
            value = value * x + coeff
        if self.low >= 0:
            return value * x ** self.low
        if x in (1, -1):
            return value * x ** (-self.low)
        raise AlexanderError("exact evaluation of negative powers needs x = ±1")

    def eval_mod(self, x, m):
        return eval_mod(self, x, m)

    def __neg__(self):
        return LaurentPoly(tuple(-c for c in self.coeffs), self.low)

    def __add__(self, other):
        low = min(self.low, other.low)
        mine = (0,) * (self.low - low) + self.coeffs
        theirs = (0,) * (other.low - low) + other.coeffs
        return LaurentPoly(tuple(a + b for a, b in zip_longest(mine, theirs, fillvalue=0)), low)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(tuple(other * c for c in self.coeffs), self.low)
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return LaurentPoly(tuple(product), self.low + other.low)

    __rmul__ = __mul__

    def normalized(self):
        """Divide por t^low y ajusta el signo para que Δ(1) = 1 (o el coeficiente líder sea positivo)"""
        if self.is_zero:
            raise AlexanderError("cannot normalize the zero polynomial")
        shifted = LaurentPoly(self.coeffs, 0)
        at_one = sum(shifted.coeffs)
        if at_one < 0 or (at_one == 0 and shifted.coeffs[-1] < 0):
            shifted = -shifted
        return shifted

    def knot_form_violations(self):
        """Lista las propiedades de polinomio de Alexander de nudo que no se cumplen"""
        problems = []
        coeffs = self.coeffs
        if self.low != 0 or not coeffs:
            problems.append("lowest term must have degree 0")
            return problems
        if sum(coeffs) != 1:
            problems.append(f"value at t=1 is {sum(coeffs)}, expected 1")
        if coeffs != coeffs[::-1]:
            problems.append("coefficients are not palindromic")
        if self.span % 2:
            problems.append(f"degree {self.span} is odd")
        elif coeffs[self.span // 2] % 2 == 0:
            problems.append("middle coefficient is even")
        return problems

    def to_json(self):
        return list(self.coeffs) if self.low == 0 else {'low': self.low, 'coeffs': list(self.coeffs)}

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for offset in range(len(self.coeffs) - 1, -1, -1):
            coeff = self.coeffs[offset]
            if coeff == 0:
                continue
            exponent = self.low + offset
            size = abs(coeff)
            if exponent == 0:
                body = str(size)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if size == 1 else f"{size}{power}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return ' '.join(parts)


ONE = LaurentPoly((1,))


def eval_mod(poly, x, m):
    """Σ a_i x^i mod m por Horner, reduciendo en cada paso"""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    x %= m
    value = 0
    for coeff in reversed(poly.coeffs):
        value = (value * x + coeff) % m
    if poly.low:
        value = value * pow(x, poly.low, m) % m
    return value


@dataclass(frozen=True)
class PolyMatrix:
    """Matriz c×c de relaciones sobre Z[t] (fila i = cruce i)"""
    matrix: DomainMatrix

    @property
    def size(self):
        return self.matrix.shape[0]

    def entry(self, row, col):
        return LaurentPoly.from_ring_element(self.matrix[row, col].element)

    def rows(self):
        return [[LaurentPoly.from_ring_element(element) for element in row] for row in self.matrix.to_list()]

    def evaluate(self, x, modulus=None):
        """Sustituye t = x; opcionalmente reduce mod ``modulus``"""
        values = [[entry(x) for entry in row] for row in self.rows()]
        if modulus is not None:
            values = [[value % modulus for value in row] for row in values]
        return values

    def minor(self, row, col):
        keep_rows = [i for i in range(self.size) if i != row]
        keep_cols = [j for j in range(self.size) if j != col]
        return self.matrix.extract(keep_rows, keep_cols)


def relation_matrix_t(diagram):
    """Por cada cruce (o, r, l): +1 en r, (t - 1) en o, -t en l"""
    validate(diagram).raise_if_invalid()
    c = diagram.arc_count
    rows = [[RING.zero] * c for _ in range(c)]
    for index, crossing in enumerate(diagram.crossings):
        row = rows[index]
        row[crossing.right] += RING.one
        row[crossing.over] += T - 1
        row[crossing.left] += -T
    return PolyMatrix(DomainMatrix(rows, (c, c), DOMAIN))


def minor_determinant(matrix, row, col):
    """Determinante (Bareiss sobre ZZ[t]) del menor sin la fila y columna dadas"""
    if matrix.size == 1:
        return ONE
    return LaurentPoly.from_ring_element(matrix.minor(row, col).det())


def cofactor_determinant(rows):
    """Desarrollo por cofactores sobre la primera fila; sólo para matrices chicas"""
    size = len(rows)
    if size > MAX_COFACTOR_SIZE:
        raise AlexanderError(f"cofactor expansion is limited to size {MAX_COFACTOR_SIZE}")
    if size == 0:
        return ONE
    if size == 1:
        return rows[0][0]
    total = LaurentPoly(())
    for col, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        sub = [row[:col] + row[col + 1:] for row in rows[1:]]
        term = entry * cofactor_determinant(sub)
        total = total + term if col % 2 == 0 else total - term
    return total


def alexander_polynomial(diagram):
    """Δ normalizado: menor sin la última fila y columna, sin potencias de t y con Δ(1) = 1"""
    matrix = relation_matrix_t(diagram)
    last = matrix.size - 1
    raw = minor_determinant(matrix, last, last)
    logger.debug("menor %dx%d de %s: %s", last, last, diagram.name or 'diagrama', raw)
    if raw.is_zero:
        raise AlexanderError("minor determinant is identically 0: not a knot diagram")
    delta = raw.normalized()
    problems = delta.knot_form_violations()
    if problems:
        raise AlexanderError(f"not a knot polynomial ({'; '.join(problems)}): {delta}")
    return delta
