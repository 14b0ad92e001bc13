import json
import tempfile
from io import StringIO
from math import gcd, prod
from pathlib import Path

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from sympy import Matrix, ZZ, primefactors
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from cuandles.quandle_core import (
    CATALOG,
    QS6_TO_Z3,
    LinearQuandleParams,
    ParameterError,
    catalog_quandle,
    make_linear_quandle,
)
from diagramas.alexander import LaurentPoly, alexander_polynomial, eval_mod, relation_matrix_t
from diagramas.diagram import named_diagram

from .coloring_search import (
    GEQ8,
    GEQ8_TEXT,
    ColorabilityError,
    SearchScaleError,
    brute_force_quandle_count,
    colorability_bound,
    compose_coloring,
    find_nontrivial_coloring,
    is_linear_n_colorable,
    is_quandle_colorable,
    iter_quandle_colorings,
    minimal_linear_order,
    minimal_quandle_order,
    quandle_coloring_count,
    s4_colorable_by_alexander,
)
from .forms import CuandleForm, FuenteDiagramaForm, ParametrosLinealesForm, TwistForm
from .linear_coloring import (
    ColoringLimitError,
    RelationMatrixZ,
    brute_force_coloring_count,
    colorable_by_alexander,
    coloring_count,
    diagram_smith_form,
    enumerate_colorings,
    is_colorable,
    lift_coloring,
    project_coloring,
    relation_matrix,
    smith_normal_form,
)
from .twist import (
    FIVE_FAMILIES,
    FIVE_RESIDUES,
    FIVE_WITNESS,
    S4_RESIDUES_MOD_12,
    SEVEN_FAMILIES,
    SEVEN_RESIDUES,
    SEVEN_WITNESS,
    TwistKnot,
    literal_family_match,
    twist_alexander,
    twist_diagram,
    twist_linear_colorable,
    twist_min_quandle_order,
    twist_s4_colorable,
    twist_table,
)

SMALL_KNOTS = ('trefoil', 'trefoil-kink', 'trefoil-pd', 'figure-eight', 'unknot-1', 'unknot-2')
PHI_15 = LaurentPoly((1, -1, 0, 1, -1, 1, 0, -1, 1))
TWIST_Q = [3, 4, 7, 3, 4, 4, 3, GEQ8, 4, 3, GEQ8, 5]


def linear_params(n, limit):
    """Parámetros (n, l, k) admisibles con l, k <= limit"""
    return [
        LinearQuandleParams(n, ell, k)
        for ell in range(1, limit + 1)
        for k in range(1, limit + 1)
        if gcd(n, ell) == 1 and gcd(n, k) == 1
    ]


def run(command, **options):
    out = StringIO()
    call_command(command, stdout=out, stderr=StringIO(), **options)
    return out.getvalue().strip()


class SmithNormalFormTests(SimpleTestCase):

    def assert_decomposition(self, matrix, result):
        left = np.array(result.left, dtype=object)
        right = np.array(result.right, dtype=object)
        diagonal = np.diag(np.array(result.divisors, dtype=object))
        self.assertTrue((left.dot(matrix.as_array()).dot(right) == diagonal).all())
        self.assertIn(Matrix(result.left).det(), (1, -1))
        self.assertIn(Matrix(result.right).det(), (1, -1))

    def assert_chain(self, divisors):
        nonzero = [d for d in divisors if d]
        self.assertEqual(list(divisors), nonzero + [0] * (len(divisors) - len(nonzero)))
        self.assertTrue(all(d > 0 for d in nonzero))
        for a, b in zip(nonzero, nonzero[1:]):
            self.assertEqual(b % a, 0)

    def test_trefoil(self):
        snf = diagram_smith_form(named_diagram('trefoil'), LinearQuandleParams(3, 1, 1))
        self.assertEqual(snf.divisors, (1, 3, 0))
        self.assertEqual(snf.rank, 2)

    def test_textbook_example(self):
        matrix = RelationMatrixZ(((2, 4, 4), (-6, 6, 12), (10, -4, -16)))
        result = smith_normal_form(matrix)
        self.assertEqual(result.divisors, (2, 6, 12))
        self.assert_decomposition(matrix, result)

    def test_zero_matrix(self):
        self.assertEqual(smith_normal_form(RelationMatrixZ(((0, 0), (0, 0)))).divisors, (0, 0))

    def test_decomposition_and_divisibility(self):
        diagrams = [named_diagram(name) for name in ('trefoil', 'figure-eight', '10_124', 'trefoil-kink')]
        diagrams += [twist_diagram(6), twist_diagram(9)]
        for diagram in diagrams:
            for ell, k in ((1, 1), (1, 2), (2, 3), (3, 1), (1, 21)):
                matrix = relation_matrix(diagram, LinearQuandleParams(97, ell, k))
                with self.subTest(diagram=diagram.name, ell=ell, k=k):
                    result = smith_normal_form(matrix)
                    self.assert_decomposition(matrix, result)
                    self.assert_chain(result.divisors)

    def test_agrees_with_sympy(self):
        for name in ('trefoil', 'figure-eight', '10_124'):
            diagram = named_diagram(name)
            for ell, k in ((1, 1), (1, 3), (2, 5)):
                matrix = relation_matrix(diagram, LinearQuandleParams(101, ell, k))
                reference = sympy_smith_normal_form(Matrix(matrix.rows), domain=ZZ)
                diagonal = [abs(reference[i, i]) for i in range(matrix.size)]
                ours = smith_normal_form(matrix).divisors
                with self.subTest(name=name, ell=ell, k=k):
                    self.assertEqual(diagonal.count(0), ours.count(0))
                    self.assertEqual(prod(d for d in diagonal if d), prod(d for d in ours if d))


class LinearColoringTests(SimpleTestCase):

    def test_trefoil_counts(self):
        trefoil = named_diagram('trefoil')
        self.assertEqual(coloring_count(trefoil, LinearQuandleParams(3, 1, 1)), 9)
        self.assertEqual(coloring_count(trefoil, LinearQuandleParams(15, 1, 1)), 45)
        self.assertTrue(is_colorable(trefoil, LinearQuandleParams(3, 1, 1)))
        self.assertFalse(is_colorable(trefoil, LinearQuandleParams(5, 1, 1)))

    def test_figure_eight_five_colorings(self):
        self.assertEqual(coloring_count(named_diagram('figure-eight'), LinearQuandleParams(5, 1, 1)), 25)

    def test_unknot_has_only_constant_colorings(self):
        for name in ('unknot-1', 'unknot-2'):
            for n in (3, 5, 9, 31):
                with self.subTest(name=name, n=n):
                    self.assertEqual(coloring_count(named_diagram(name), LinearQuandleParams(n, 1, 1)), n)

    def test_smith_count_matches_brute_force(self):
        diagrams = [named_diagram(name) for name in SMALL_KNOTS] + [twist_diagram(5), twist_diagram(6)]
        for diagram in diagrams:
            for n in range(2, 10):
                for params in linear_params(n, 4):
                    with self.subTest(name=diagram.name, params=params.label):
                        self.assertEqual(coloring_count(diagram, params), brute_force_coloring_count(diagram, params))

    def test_brute_force_cap(self):
        with self.assertRaises(ColoringLimitError):
            brute_force_coloring_count(named_diagram('10_124'), LinearQuandleParams(31, 1, 21))

    def test_large_modulus_is_exact(self):
        n = 31 * 10 ** 30
        count = coloring_count(named_diagram('10_124'), LinearQuandleParams(n, 1, 21))
        self.assertEqual(count % n, 0)
        self.assertGreater(count, n)
        self.assertEqual(31 ** 10 % (count // n), 0)

    def test_kink_does_not_change_counts(self):
        trefoil, kinked = named_diagram('trefoil'), named_diagram('trefoil-kink')
        for n in range(2, 16):
            for params in linear_params(n, 5):
                with self.subTest(params=params.label):
                    self.assertEqual(coloring_count(trefoil, params), coloring_count(kinked, params))

    def test_scaling_ell_keeps_the_count(self):
        diagram = named_diagram('figure-eight')
        for n in (5, 7, 10, 11, 15):
            for params in linear_params(n, 6):
                reduced = LinearQuandleParams(n, 1, params.ell_inv * params.k % n)
                with self.subTest(params=params.label):
                    self.assertEqual(coloring_count(diagram, params), coloring_count(diagram, reduced))

    def test_swapping_ell_and_k_keeps_colorability(self):
        for name in ('trefoil', 'figure-eight', '10_124'):
            diagram = named_diagram(name)
            for n in range(3, 32):
                for params in linear_params(n, 5):
                    swapped = LinearQuandleParams(n, params.k, params.ell)
                    with self.subTest(name=name, params=params.label):
                        self.assertEqual(is_colorable(diagram, params), is_colorable(diagram, swapped))

    def test_alexander_criterion(self):
        for name in ('trefoil', 'figure-eight', 'trefoil-kink', '10_124', 'unknot-2'):
            diagram = named_diagram(name)
            delta = alexander_polynomial(diagram)
            for n in range(3, 36):
                for params in linear_params(n, 4):
                    with self.subTest(name=name, params=params.label):
                        witness = colorable_by_alexander(delta, params)
                        self.assertEqual(bool(witness), is_colorable(diagram, params))
                        if witness:
                            self.assertEqual(n % witness.p, 0)
                            self.assertEqual(eval_mod(delta, witness.residue, witness.p), 0)

    def test_inverting_k_keeps_prime_colorability(self):
        corpus = [twist_diagram(c) for c in range(3, 13)] + [named_diagram('10_124')]
        for diagram in corpus:
            for p in (3, 5, 7, 11, 13):
                for k in range(1, p):
                    if not is_colorable(diagram, LinearQuandleParams(p, 1, k)):
                        continue
                    with self.subTest(name=diagram.name, p=p, k=k):
                        self.assertTrue(is_colorable(diagram, LinearQuandleParams(p, 1, pow(k, -1, p))))

    def test_colorability_lifts_to_multiples(self):
        corpus = [twist_diagram(c) for c in range(3, 13)] + [named_diagram('10_124')]
        for diagram in corpus:
            for n in range(2, 41):
                for params in linear_params(n, 3):
                    if not is_colorable(diagram, params):
                        continue
                    for m in range(2 * n, 41, n):
                        if gcd(m, params.ell) != 1 or gcd(m, params.k) != 1:
                            continue
                        with self.subTest(name=diagram.name, params=params.label, m=m):
                            self.assertTrue(is_colorable(diagram, LinearQuandleParams(m, params.ell, params.k)))

    def test_colorability_descends_to_an_odd_prime_factor(self):
        corpus = [twist_diagram(c) for c in range(3, 13)] + [named_diagram('10_124')]
        for diagram in corpus:
            for n in range(2, 41):
                for params in linear_params(n, 3):
                    if not is_colorable(diagram, params):
                        continue
                    with self.subTest(name=diagram.name, params=params.label):
                        self.assertTrue(any(
                            is_colorable(diagram, LinearQuandleParams(p, params.ell % p, params.k % p))
                            for p in primefactors(n) if p != 2
                        ))

    def test_alexander_witness_json(self):
        witness = colorable_by_alexander(PHI_15, LinearQuandleParams(31, 1, 21))
        self.assertEqual(witness.to_json(), {'colorable': True, 'witness': {'p': 31, 'residue': 10}})
        self.assertEqual(colorable_by_alexander(PHI_15, LinearQuandleParams(5, 1, 1)).to_json()['witness'], None)

    def test_integer_matrix_is_polynomial_matrix_at_minus_k(self):
        for name in ('trefoil', 'figure-eight', '10_124'):
            diagram = named_diagram(name)
            for k in (1, 2, 5):
                integer = relation_matrix(diagram, LinearQuandleParams(101, 1, k))
                with self.subTest(name=name, k=k):
                    self.assertEqual(relation_matrix_t(diagram).evaluate(-k), [list(row) for row in integer.rows])


class EnumerationTests(SimpleTestCase):

    def test_trefoil_three_colorings(self):
        params = LinearQuandleParams(3, 1, 1)
        trefoil = named_diagram('trefoil')
        colorings = enumerate_colorings(trefoil, params)
        self.assertEqual(len(colorings), 9)
        self.assertEqual(len({coloring.assignment for coloring in colorings}), 9)
        self.assertEqual(colorings[0].assignment, (0, 0, 0))
        self.assertEqual([c.assignment for c in colorings], sorted(c.assignment for c in colorings))
        for coloring in colorings:
            self.assertTrue(coloring.is_valid(trefoil))
        self.assertEqual(sum(1 for c in colorings if c.is_trivial), 3)

    def test_limit(self):
        params = LinearQuandleParams(3, 1, 1)
        with self.assertRaises(ColoringLimitError):
            enumerate_colorings(named_diagram('trefoil'), params, limit=5)
        self.assertEqual(len(enumerate_colorings(named_diagram('trefoil'), params, limit=5, truncate=True)), 5)

    def test_matches_count(self):
        for name in ('figure-eight', 'trefoil-kink'):
            diagram = named_diagram(name)
            for params in linear_params(15, 4):
                with self.subTest(name=name, params=params.label):
                    colorings = enumerate_colorings(diagram, params)
                    self.assertEqual(len(colorings), coloring_count(diagram, params))
                    self.assertTrue(all(c.is_valid(diagram) for c in colorings))

    def test_lift_and_project(self):
        trefoil = named_diagram('trefoil')
        for coloring in enumerate_colorings(trefoil, LinearQuandleParams(3, 1, 1)):
            lifted = lift_coloring(coloring, 15)
            self.assertTrue(lifted.is_valid(trefoil))
            self.assertEqual(len(set(lifted.assignment)), len(set(coloring.assignment)))
        for coloring in enumerate_colorings(trefoil, LinearQuandleParams(15, 1, 1)):
            projected = project_coloring(coloring, 3)
            self.assertTrue(projected.is_valid(trefoil))

    def test_lift_needs_a_multiple(self):
        coloring = enumerate_colorings(named_diagram('trefoil'), LinearQuandleParams(3, 1, 1))[4]
        with self.assertRaises(ValueError):
            lift_coloring(coloring, 10)
        with self.assertRaises(ValueError):
            project_coloring(coloring, 2)


class LinearOrderTests(SimpleTestCase):

    def test_n_colorability(self):
        trefoil = LaurentPoly((1, -1, 1))
        verdict = is_linear_n_colorable(trefoil, 9)
        self.assertTrue(verdict)
        self.assertEqual(verdict.to_json(), {'colorable': True, 'witness': {'p': 3, 'k': 1}})
        self.assertFalse(is_linear_n_colorable(trefoil, 8))
        self.assertFalse(is_linear_n_colorable(trefoil, 5))

    def test_bounds(self):
        cases = [((1, -1, 1), 2, 7), ((-1, 3, -1), 4, 29), (PHI_15.coeffs, 2, 331)]
        for coeffs, k, n_bound in cases:
            with self.subTest(coeffs=coeffs):
                bound = colorability_bound(LaurentPoly(coeffs))
                self.assertEqual((bound.k, bound.n_bound), (k, n_bound))

    def test_bound_properties_on_twist_knots(self):
        for c in range(3, 60):
            bound = colorability_bound(twist_alexander(c))
            with self.subTest(c=c):
                self.assertEqual(bound.n_bound % 2, 1)
                self.assertEqual(gcd(bound.n_bound, bound.k), 1)
                self.assertGreater(bound.n_bound, bound.k + 1)
                self.assertTrue(is_linear_n_colorable(twist_alexander(c), bound.n_bound))

    def test_trivial_polynomial_has_no_bound(self):
        with self.assertRaises(ColorabilityError):
            colorability_bound(LaurentPoly((1,)))

    def test_minimal_linear_orders(self):
        cases = {'trefoil': 3, 'figure-eight': 5, '10_124': 31}
        for name, order in cases.items():
            delta = alexander_polynomial(named_diagram(name))
            with self.subTest(name=name):
                result = minimal_linear_order(delta)
                self.assertEqual(result.order, order)
                self.assertEqual(result.witness.p, order)
                self.assertEqual(eval_mod(delta, -result.witness.k, order), 0)

    def test_minimal_linear_order_text(self):
        result = minimal_linear_order(LaurentPoly((1, -1, 1)))
        self.assertEqual(str(result), "3 (Z3,1*1)")
        self.assertEqual(result.to_json(), {'min_order': 3, 'witness': {'p': 3, 'k': 1}})


class QuandleColoringTests(SimpleTestCase):

    def test_backtracking_matches_smith_form(self):
        for name in ('trefoil', 'figure-eight', 'trefoil-kink', '10_124'):
            diagram = named_diagram(name)
            for n in (3, 5, 7, 9, 11):
                for params in linear_params(n, 3):
                    with self.subTest(name=name, params=params.label):
                        self.assertEqual(
                            quandle_coloring_count(diagram, make_linear_quandle(params)),
                            coloring_count(diagram, params),
                        )

    def test_backtracking_matches_brute_force(self):
        diagrams = [named_diagram(name) for name in ('trefoil', 'figure-eight', 'trefoil-kink', 'unknot-2')]
        for diagram in diagrams + [twist_diagram(5), twist_diagram(6)]:
            for quandle_name in CATALOG:
                quandle = catalog_quandle(quandle_name)
                with self.subTest(name=diagram.name, quandle=quandle_name):
                    self.assertEqual(
                        quandle_coloring_count(diagram, quandle),
                        brute_force_quandle_count(diagram, quandle),
                    )

    def test_colorings_satisfy_crossing_condition(self):
        diagram = named_diagram('figure-eight')
        s4 = catalog_quandle('S4')
        colorings = list(iter_quandle_colorings(diagram, s4))
        self.assertGreater(len(colorings), 4)
        for coloring in colorings:
            for x in diagram.crossings:
                self.assertEqual(s4.operate(coloring[x.right], coloring[x.over]), coloring[x.left])

    def test_qs6_colorings_project_to_three_colorings(self):
        z3 = catalog_quandle('Z3_1x1')
        for name in ('trefoil', 'figure-eight', 'trefoil-kink'):
            diagram = named_diagram(name)
            for quandle_name in ('QS6', 'QS6p'):
                for coloring in iter_quandle_colorings(diagram, catalog_quandle(quandle_name)):
                    image = compose_coloring(coloring, QS6_TO_Z3)
                    with self.subTest(name=name, quandle=quandle_name, coloring=coloring):
                        for x in diagram.crossings:
                            self.assertEqual(z3.operate(image[x.right], image[x.over]), image[x.left])
                        if len(set(coloring)) > 1:
                            self.assertGreater(len(set(image)), 1)

    def test_nontrivial_coloring(self):
        coloring = find_nontrivial_coloring(named_diagram('trefoil'), catalog_quandle('Z3_1x1'))
        self.assertEqual(sorted(coloring), [0, 1, 2])
        self.assertIsNone(find_nontrivial_coloring(named_diagram('figure-eight'), catalog_quandle('Z3_1x1')))
        self.assertTrue(is_quandle_colorable(named_diagram('figure-eight'), catalog_quandle('S4')))

    def test_arc_cap(self):
        with self.assertRaises(SearchScaleError):
            quandle_coloring_count(named_diagram('10_124'), catalog_quandle('S4'), max_arcs=5)

    def test_s4_criterion(self):
        s4 = catalog_quandle('S4')
        for name in ('trefoil', 'figure-eight', '10_124', 'unknot-2'):
            diagram = named_diagram(name)
            with self.subTest(name=name):
                self.assertEqual(
                    s4_colorable_by_alexander(alexander_polynomial(diagram)),
                    is_quandle_colorable(diagram, s4),
                )


class MinimalQuandleOrderTests(SimpleTestCase):

    def test_known_knots(self):
        cases = {
            'trefoil': (3, 'Z3_1x1'),
            'trefoil-pd': (3, 'Z3_1x1'),
            'figure-eight': (4, 'S4'),
            '10_124': (GEQ8, None),
            'unknot-2': (GEQ8, None),
        }
        for name, (order, witness) in cases.items():
            with self.subTest(name=name):
                result = minimal_quandle_order(named_diagram(name))
                self.assertEqual(result.order, order)
                self.assertEqual(result.witness_quandle, witness)

    def test_text(self):
        self.assertEqual(str(minimal_quandle_order(named_diagram('figure-eight'))), "4 (S4)")
        self.assertEqual(str(minimal_quandle_order(named_diagram('10_124'))), GEQ8_TEXT)
        self.assertEqual(
            minimal_quandle_order(named_diagram('trefoil')).to_json(),
            {'min_order': 3, 'witness_quandle': 'Z3_1x1'},
        )


class TwistKnotTests(SimpleTestCase):

    def test_needs_three_crossings(self):
        for c in (0, 1, 2):
            with self.assertRaises(ParameterError):
                TwistKnot(c)

    def test_small_twist_knots(self):
        self.assertEqual(alexander_polynomial(twist_diagram(3)).coeffs, (1, -1, 1))
        self.assertEqual(alexander_polynomial(twist_diagram(4)).coeffs, (-1, 3, -1))
        self.assertEqual(str(twist_alexander(5)), "2t^2 - 3t + 2")

    def test_generator_matches_closed_form(self):
        for c in range(3, 41):
            diagram = twist_diagram(c)
            with self.subTest(c=c):
                self.assertEqual(diagram.arc_count, c)
                self.assertEqual(diagram.name, f"twist-{c}")
                self.assertEqual(alexander_polynomial(diagram), twist_alexander(c))

    def test_linear_residue_condition(self):
        for c in range(3, 41):
            delta = twist_alexander(c)
            for n in range(3, 30):
                for k in range(1, n):
                    if gcd(n, k) != 1 or (k + 1) % n == 0:
                        continue
                    with self.subTest(c=c, n=n, k=k):
                        verdict = twist_linear_colorable(c, n, k)
                        self.assertEqual(verdict.colorable, eval_mod(delta, -k, n) == 0)
                        if verdict.colorable and c <= 14:
                            self.assertTrue(is_colorable(twist_diagram(c), LinearQuandleParams(n, 1, k)))

    def test_residue_condition_is_exact_for_primes(self):
        for c in range(3, 15):
            diagram = twist_diagram(c)
            for n in (3, 5, 7, 11, 13):
                for k in range(1, n - 1):
                    with self.subTest(c=c, n=n, k=k):
                        verdict = twist_linear_colorable(c, n, k)
                        self.assertTrue(verdict.iff_guaranteed)
                        self.assertEqual(bool(verdict), is_colorable(diagram, LinearQuandleParams(n, 1, k)))

    def test_linear_parameter_errors(self):
        for n, k in ((6, 2), (5, 4), (1, 1), (5, 0)):
            with self.subTest(n=n, k=k):
                with self.assertRaises(ParameterError):
                    twist_linear_colorable(7, n, k)
        self.assertFalse(twist_linear_colorable(5, 9, 1).iff_guaranteed)

    def test_s4_rule(self):
        s4 = catalog_quandle('S4')
        for c in range(3, 61):
            with self.subTest(c=c):
                self.assertEqual(twist_s4_colorable(c), s4_colorable_by_alexander(twist_alexander(c)))
                if c <= 16:
                    self.assertEqual(twist_s4_colorable(c), is_quandle_colorable(twist_diagram(c), s4))

    def test_expected_orders(self):
        self.assertEqual([twist_min_quandle_order(c).q_value for c in range(3, 15)], TWIST_Q)
        self.assertEqual(twist_min_quandle_order(25).witness, 'Z7_1x3')
        self.assertEqual(twist_min_quandle_order(25).q_value, 7)
        self.assertEqual(twist_min_quandle_order(26).witness, 'Z5_1x2')
        self.assertEqual(twist_min_quandle_order(26).q_value, 5)

    def test_classifier_matches_search(self):
        for c in range(3, 41):
            expected = twist_min_quandle_order(c)
            with self.subTest(c=c):
                found = minimal_quandle_order(twist_diagram(c))
                self.assertEqual((found.order, found.witness_quandle), (expected.q_value, expected.witness))

    def test_alexander_criterion_on_twist_knots(self):
        for c in range(3, 13):
            diagram, delta = twist_diagram(c), twist_alexander(c)
            for n in range(3, 41):
                for params in linear_params(n, 6):
                    self.assertEqual(
                        is_colorable(diagram, params),
                        bool(colorable_by_alexander(delta, params)),
                        msg=f"c={c} {params.label}",
                    )

    def test_twist_polynomials_invert_evaluation(self):
        for c in range(3, 41):
            delta = twist_alexander(c)
            for p in (3, 5, 7, 11, 13, 31):
                for k in range(1, p):
                    kbar = pow(k, -1, p)
                    with self.subTest(c=c, p=p, k=k):
                        self.assertEqual(
                            eval_mod(delta, -kbar, p),
                            pow(-kbar % p, delta.span, p) * eval_mod(delta, -k, p) % p,
                        )

    def test_qs6_colorings_imply_three_colorings(self):
        z3 = catalog_quandle('Z3_1x1')
        for c in range(3, 41):
            diagram = twist_diagram(c)
            for name in ('QS6', 'QS6p'):
                coloring = find_nontrivial_coloring(diagram, catalog_quandle(name))
                if coloring is None:
                    continue
                with self.subTest(c=c, quandle=name):
                    self.assertTrue(is_quandle_colorable(diagram, z3))
                    self.assertGreater(len(set(compose_coloring(coloring, QS6_TO_Z3))), 1)

    def test_families_expand_to_residues(self):
        for c in range(3, 2001):
            with self.subTest(c=c):
                self.assertEqual(literal_family_match(c, 60, FIVE_FAMILIES, FIVE_WITNESS), FIVE_RESIDUES.get(c % 60))
                self.assertEqual(
                    literal_family_match(c, 420, SEVEN_FAMILIES, SEVEN_WITNESS),
                    SEVEN_RESIDUES.get(c % 420),
                )

    def test_residue_classes_are_disjoint(self):
        for residue in FIVE_RESIDUES:
            self.assertNotEqual(residue % 3, 0)
            self.assertNotIn(residue % 12, S4_RESIDUES_MOD_12)
        for residue in SEVEN_RESIDUES:
            self.assertNotEqual(residue % 3, 0)
            self.assertNotIn(residue % 12, S4_RESIDUES_MOD_12)
            self.assertNotIn(residue % 60, FIVE_RESIDUES)

    def test_verdict_text(self):
        self.assertEqual(str(twist_min_quandle_order(5)), "c=5, q=7, witness (Z7,1*1)")
        self.assertEqual(str(twist_min_quandle_order(10)), "c=10, q=≥8")
        self.assertEqual(twist_min_quandle_order(10).to_json(), {'c': 10, 'q_value': GEQ8, 'witness': None})

    def test_table_rows(self):
        rows = twist_table(3, 6)
        self.assertEqual([c for c, _, _ in rows], [3, 4, 5, 6])
        self.assertEqual(rows[1][1], LaurentPoly((-1, 3, -1)))
        self.assertEqual(rows[3][2].witness, 'Z3_1x1')


class FormTests(SimpleTestCase):

    def test_single_source(self):
        form = FuenteDiagramaForm({'knot': 'trefoil'})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['diagram'].arc_count, 3)
        self.assertFalse(FuenteDiagramaForm({}).is_valid())
        self.assertFalse(FuenteDiagramaForm({'knot': 'trefoil', 'inline': 'X 0 0 0'}).is_valid())

    def test_inline_detects_format(self):
        pd = FuenteDiagramaForm({'inline': 'X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]'})
        self.assertTrue(pd.is_valid())
        triples = FuenteDiagramaForm({'inline': 'X 0 2 1\nX 1 0 2\nX 2 1 0'})
        self.assertTrue(triples.is_valid())
        self.assertEqual(pd.cleaned_data['diagram'].arc_count, triples.cleaned_data['diagram'].arc_count)

    def test_inline_errors_are_reported(self):
        form = FuenteDiagramaForm({'inline': 'X 0 2'})
        self.assertFalse(form.is_valid())
        self.assertIn("line 1: expected 3 arc ids", str(form.errors))

    def test_twist_names(self):
        form = FuenteDiagramaForm({'knot': 'twist-7'})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['diagram'].name, 'twist-7')
        self.assertFalse(FuenteDiagramaForm({'knot': 'twist-2'}).is_valid())
        self.assertFalse(FuenteDiagramaForm({'knot': 'nudo-raro'}).is_valid())

    def test_linear_params(self):
        form = ParametrosLinealesForm({'n': 31, 'ell': 1, 'k': 21})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['params'], LinearQuandleParams(31, 1, 21))
        for data in ({'n': 6, 'ell': 1, 'k': 2}, {'n': 1, 'ell': 1, 'k': 1}, {'n': 5, 'ell': 1}):
            with self.subTest(data=data):
                self.assertFalse(ParametrosLinealesForm(data).is_valid())

    def test_quandle_field(self):
        self.assertEqual(CuandleForm({'quandle': 'S4'}).is_valid(), True)
        table = json.dumps({'table': [[0, 2, 1], [2, 1, 0], [1, 0, 2]]})
        form = CuandleForm({'quandle': table})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['quandle'], catalog_quandle('Z3_1x1'))
        bad = CuandleForm({'quandle': json.dumps({'table': [[1, 0], [0, 1]]})})
        self.assertFalse(bad.is_valid())
        unknown = CuandleForm({'quandle': 'Z9_1x1'})
        self.assertFalse(unknown.is_valid())
        self.assertIn('Nombres válidos', str(unknown.errors))

    def test_twist_form(self):
        single = TwistForm({'c': 5})
        self.assertTrue(single.is_valid())
        self.assertEqual(single.cleaned_data['bounds'], (5, 5))
        span = TwistForm({'range': '3..14'})
        self.assertTrue(span.is_valid())
        self.assertEqual(span.cleaned_data['bounds'], (3, 14))
        for data in ({}, {'c': 5, 'range': '3..4'}, {'range': '14..3'}, {'range': '3-4'}, {'c': 2}):
            with self.subTest(data=data):
                self.assertFalse(TwistForm(data).is_valid())


class CommandTests(SimpleTestCase):

    def test_alexander(self):
        self.assertEqual(run('alexander', knot='figure-eight'), "-t^2 + 3t - 1")
        data = json.loads(run('alexander', knot='trefoil', format='json'))
        self.assertEqual(data, {'alexander': [1, -1, 1], 'text': 't^2 - t + 1'})

    def test_alexander_from_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'trivial.tri'
            path.write_text("X 0 1 0\nX 1 0 1\n", encoding='utf-8')
            self.assertEqual(run('alexander', input=str(path)), "1")

    def test_color(self):
        self.assertEqual(run('color', knot='trefoil', n=3, k=1), "count: 9, colorable: yes")
        self.assertEqual(run('color', knot='trefoil', n=15, k=1), "count: 45, colorable: yes")
        self.assertEqual(run('color', knot='trefoil', n=5, k=1), "count: 5, colorable: no")
        data = json.loads(run('color', knot='figure-eight', quandle='S4', format='json'))
        self.assertTrue(data['colorable'])
        self.assertEqual(data['quandle'], 'S4')
        self.assertEqual(run('color', knot='unknot-1', n=5, k=1), "count: 5, colorable: no")
        qs6 = json.loads(run('color', knot='trefoil', quandle='QS6', format='json'))
        three = json.loads(run('color', knot='trefoil', quandle='Z3_1x1', format='json'))
        self.assertTrue(three['colorable'] or not qs6['colorable'])

    def test_color_listing(self):
        lines = run('color', knot='trefoil', n=3, k=1, list=4).splitlines()
        self.assertEqual(lines[0], "count: 9, colorable: yes")
        self.assertEqual(lines[1], "0 0 0")
        self.assertEqual(len(lines), 5)
        data = json.loads(run('color', knot='trefoil', n=3, k=1, list=2, format='json'))
        self.assertEqual(data['count'], '9')
        self.assertEqual(len(data['colorings']), 2)

    def test_min_order(self):
        self.assertEqual(run('min_order', knot='trefoil'), "3 (Z3,1*1)")
        self.assertTrue(run('min_order', knot='10_124').startswith("31 (Z31,1*"))
        self.assertEqual(run('min_order', knot='figure-eight', mode='quandle'), "4 (S4)")
        data = json.loads(run('min_order', knot='10_124', mode='quandle', format='json'))
        self.assertEqual(data, {'min_order': GEQ8, 'witness_quandle': None})

    def test_twist_single(self):
        self.assertEqual(run('twist', c=5), "c=5, q=7, witness (Z7,1*1)")
        data = json.loads(run('twist', c=26, format='json'))
        self.assertEqual(data['witness'], 'Z5_1x2')
        self.assertEqual(data['delta'], [-12, 25, -12])

    def test_twist_range_csv(self):
        lines = run('twist', range='3..5').splitlines()
        self.assertEqual(lines[0], "c,delta,q_value,witness")
        self.assertEqual(lines[1], "3,t^2 - t + 1,3,(Z3,1*1)")
        self.assertEqual(lines[2], "4,-t^2 + 3t - 1,4,S4")
        self.assertEqual(len(lines), 4)

    def test_twist_verify_and_pdf(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'twist.pdf'
            run('twist', range='3..14', verify=True, pdf=str(path))
            self.assertTrue(path.read_bytes().startswith(b'%PDF'))

    def test_malformed_file_reports_line(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'roto.tri'
            path.write_text("X 0 2 1\nX 1 0\n", encoding='utf-8')
            with self.assertRaises(CommandError) as ctx:
                run('alexander', input=str(path))
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('line 2', str(ctx.exception))

    def test_usage_errors_exit_with_two(self):
        cases = [
            ('twist', {'c': 2}),
            ('twist', {}),
            ('alexander', {}),
            ('alexander', {'inline': 'X 0 2'}),
            ('color', {'knot': 'trefoil', 'n': 6, 'k': 2}),
            ('color', {'knot': 'trefoil', 'n': 3}),
            ('color', {'knot': 'trefoil', 'quandle': 'Z9_1x1'}),
            ('min_order', {'knot': 'unknot-2'}),
        ]
        for command, options in cases:
            with self.subTest(command=command, options=options):
                with self.assertRaises(CommandError) as ctx:
                    run(command, **options)
                self.assertEqual(ctx.exception.returncode, 2)
