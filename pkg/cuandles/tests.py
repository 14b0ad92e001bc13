import json
from math import gcd

from django.test import SimpleTestCase, override_settings
from sympy import Poly, symbols

from .quandle_core import (
    CATALOG,
    QS6P_MATRIX,
    QS6_MATRIX,
    QS6_TO_Z3,
    FiniteQuandle,
    LinearQuandleParams,
    MalformedTableError,
    ParameterError,
    QuandleError,
    brute_force_isomorphic,
    canonical_params,
    catalog_indecomposable,
    catalog_quandle,
    is_homomorphism,
    linear_isomorphic_sufficient,
    make_linear_quandle,
    make_polynomial_alexander_quandle,
    make_tetrahedron_quandle,
    orbit_components,
    orbit_decomposition,
    orbit_subquandle,
    quandle_from_json,
    quandle_to_json,
    shift_one_based,
    verify_quandle_axioms,
)


def admissible(n, limit=None):
    """Pares (l, k) con gcd(n, l) = gcd(n, k) = 1"""
    top = limit or n
    return [(ell, k) for ell in range(1, top + 1) for k in range(1, top + 1) if gcd(n, ell) == 1 and gcd(n, k) == 1]


class LinearQuandleTests(SimpleTestCase):

    def test_dihedral_three(self):
        quandle = make_linear_quandle(LinearQuandleParams(3, 1, 1))
        self.assertEqual(quandle.operate(0, 1), 2)
        for a in range(3):
            for b in range(3):
                self.assertEqual(quandle.operate(a, b), (2 * b - a) % 3)

    def test_formula_example_mod_five(self):
        quandle = make_linear_quandle(LinearQuandleParams(5, 1, 2))
        self.assertEqual(quandle.operate(0, 1), 4)
        self.assertTrue(verify_quandle_axioms(quandle).passed)

    def test_order_31_quandle_is_valid(self):
        quandle = make_linear_quandle(LinearQuandleParams(31, 1, 21))
        self.assertEqual(quandle.order, 31)
        self.assertTrue(verify_quandle_axioms(quandle))

    def test_rejects_non_coprime_parameters(self):
        for n, ell, k in [(6, 1, 2), (9, 3, 1), (1, 1, 1), (5, 0, 1)]:
            with self.subTest(n=n, ell=ell, k=k):
                with self.assertRaises(ParameterError):
                    LinearQuandleParams(n, ell, k)

    def test_inverses(self):
        params = LinearQuandleParams(31, 3, 21)
        self.assertEqual(params.k * params.k_inv % 31, 1)
        self.assertEqual(params.ell * params.ell_inv % 31, 1)

    def test_axioms_on_sampled_grid(self):
        for n in (2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 21, 31, 50):
            for ell, k in admissible(n, limit=7):
                with self.subTest(n=n, ell=ell, k=k):
                    self.assertTrue(verify_quandle_axioms(make_linear_quandle(LinearQuandleParams(n, ell, k))))

    def test_canonical_params(self):
        self.assertEqual(canonical_params(LinearQuandleParams(31, 3, 1)), LinearQuandleParams(31, 1, 21))
        self.assertEqual(canonical_params(LinearQuandleParams(7, 1, 3)), LinearQuandleParams(7, 1, 3))

    def test_labels(self):
        params = LinearQuandleParams(7, 1, 3)
        self.assertEqual(params.name, 'Z7_1x3')
        self.assertEqual(params.label, '(Z7,1*3)')


class AxiomReportTests(SimpleTestCase):

    def test_idempotency_failure(self):
        report = verify_quandle_axioms(FiniteQuandle([[1, 0], [0, 1]]))
        self.assertFalse(report.passed)
        self.assertEqual(report.axiom, 1)
        self.assertEqual(report.witness, (0,))

    def test_column_bijectivity_failure(self):
        report = verify_quandle_axioms(FiniteQuandle([[0, 0, 0], [1, 1, 0], [2, 0, 2]]))
        self.assertEqual(report.axiom, 2)
        self.assertEqual(report.witness, (0, 1, 2))

    def test_distributivity_failure(self):
        # Idempotente y con columnas biyectivas, pero no autodistributivo
        report = verify_quandle_axioms(FiniteQuandle([[0, 2, 0], [2, 1, 1], [1, 0, 2]]))
        self.assertEqual(report.axiom, 3)
        self.assertEqual(report.witness, (0, 1, 0))

    def test_malformed_is_reported_apart(self):
        report = verify_quandle_axioms(FiniteQuandle([[0, 5], [1, 1]]))
        self.assertTrue(report.malformed)
        self.assertIsNone(report.axiom)
        self.assertEqual(report.witness, (0, 1))
        self.assertIn('malformed', report.message)

    def test_non_square_table_rejected(self):
        with self.assertRaises(MalformedTableError):
            FiniteQuandle([[0, 1, 2], [1, 0, 2]])


class OrbitTests(SimpleTestCase):

    def test_indecomposable(self):
        decomposition = orbit_decomposition(LinearQuandleParams(15, 1, 1))
        self.assertEqual(decomposition.orbit_count, 1)
        self.assertEqual(decomposition.orbits, (tuple(range(15)),))

    def test_three_orbits(self):
        decomposition = orbit_decomposition(LinearQuandleParams(9, 1, 2))
        self.assertEqual(decomposition.orbit_count, 3)
        self.assertEqual(decomposition.orbits, ((0, 3, 6), (1, 4, 7), (2, 5, 8)))

    def test_trivial_quandle(self):
        params = LinearQuandleParams(5, 1, 4)
        self.assertEqual(orbit_decomposition(params).orbit_count, 5)
        quandle = make_linear_quandle(params)
        for a in range(5):
            for b in range(5):
                self.assertEqual(quandle.operate(a, b), a)

    def test_closed_form_matches_components(self):
        for n in range(2, 25):
            for ell, k in admissible(n, limit=6):
                params = LinearQuandleParams(n, ell, k)
                with self.subTest(n=n, ell=ell, k=k):
                    decomposition = orbit_decomposition(params)
                    components = orbit_components(make_linear_quandle(params))
                    self.assertEqual(decomposition.orbit_count, gcd(n, ell + k))
                    self.assertEqual(list(decomposition.orbits), components)

    def test_orbit_relabels_to_smaller_linear_quandle(self):
        for n, ell, k in [(9, 1, 2), (15, 1, 2), (12, 1, 5), (20, 3, 7)]:
            params = LinearQuandleParams(n, ell, k)
            d = orbit_decomposition(params).orbit_count
            if d == n:
                continue
            smaller = make_linear_quandle(LinearQuandleParams(n // d, ell, k))
            for index in range(d):
                with self.subTest(n=n, ell=ell, k=k, orbit=index):
                    self.assertEqual(orbit_subquandle(params, index), smaller)


class IsomorphismTests(SimpleTestCase):

    def test_sufficient_condition_examples(self):
        self.assertTrue(linear_isomorphic_sufficient(LinearQuandleParams(31, 3, 1), LinearQuandleParams(31, 1, 21)))
        params = LinearQuandleParams(7, 2, 3)
        self.assertTrue(linear_isomorphic_sufficient(params, params))
        self.assertFalse(linear_isomorphic_sufficient(LinearQuandleParams(5, 1, 2), LinearQuandleParams(5, 1, 3)))

    def test_modulus_mismatch(self):
        with self.assertRaises(ParameterError):
            linear_isomorphic_sufficient(LinearQuandleParams(5, 1, 1), LinearQuandleParams(7, 1, 1))

    def test_identity(self):
        for name in CATALOG:
            quandle = catalog_quandle(name)
            with self.subTest(name=name):
                self.assertTrue(brute_force_isomorphic(quandle, quandle))

    def test_order_mismatch_is_false(self):
        self.assertFalse(brute_force_isomorphic(catalog_quandle('Z3_1x1'), catalog_quandle('S4')))

    def test_qs6_variants_differ(self):
        self.assertFalse(brute_force_isomorphic(catalog_quandle('QS6'), catalog_quandle('QS6p')))

    def test_z5_one_two_vs_one_three(self):
        self.assertFalse(brute_force_isomorphic(catalog_quandle('Z5_1x2'), catalog_quandle('Z5_1x3')))

    def test_sufficient_implies_isomorphic(self):
        for n in range(3, 9):
            pairs = admissible(n)
            for ell1, k1 in pairs:
                for ell2, k2 in pairs:
                    p1, p2 = LinearQuandleParams(n, ell1, k1), LinearQuandleParams(n, ell2, k2)
                    if (ell1, k1) >= (ell2, k2) or not linear_isomorphic_sufficient(p1, p2):
                        continue
                    with self.subTest(p1=p1, p2=p2):
                        self.assertTrue(brute_force_isomorphic(make_linear_quandle(p1), make_linear_quandle(p2)))

    @override_settings(NUDOS_MAX_ORDEN_ISOMORFISMO=6)
    def test_order_cap(self):
        quandle = catalog_quandle('Z7_1x1')
        with self.assertRaises(QuandleError):
            brute_force_isomorphic(quandle, quandle)


class TetrahedronTests(SimpleTestCase):

    def test_axioms_and_indecomposable(self):
        s4 = make_tetrahedron_quandle()
        self.assertEqual(s4.order, 4)
        self.assertTrue(verify_quandle_axioms(s4))
        self.assertEqual(len(orbit_components(s4)), 1)

    def test_zero_times_one(self):
        self.assertEqual(make_tetrahedron_quandle().operate(0, 1), 3)

    def test_against_independent_ring_arithmetic(self):
        t = symbols('t')
        modulus = Poly(t**2 + t + 1, t, modulus=2)
        elements = [Poly(0, t, modulus=2), Poly(1, t, modulus=2), Poly(t, t, modulus=2), Poly(1 + t, t, modulus=2)]
        s4 = make_tetrahedron_quandle()
        for a, pa in enumerate(elements):
            for b, pb in enumerate(elements):
                expected = (Poly(t, t, modulus=2) * pa + Poly(1 + t, t, modulus=2) * pb).rem(modulus)
                with self.subTest(a=a, b=b):
                    self.assertEqual(elements[s4.operate(a, b)], expected)

    def test_polynomial_quandle_with_linear_modulus_is_linear(self):
        # En Z_5[t]/(t + 2) vale t = 3 = -1 * 3^-1, como en (Z5, 1*3)
        polynomial = make_polynomial_alexander_quandle(5, (1, 2))
        self.assertTrue(verify_quandle_axioms(polynomial))
        self.assertTrue(brute_force_isomorphic(polynomial, make_linear_quandle(LinearQuandleParams(5, 1, 3))))

    def test_bad_modulus(self):
        with self.assertRaises(ParameterError):
            make_polynomial_alexander_quandle(2, (1, 1, 0))


class CatalogTests(SimpleTestCase):

    def test_sizes_per_order(self):
        self.assertEqual([len(catalog_indecomposable(order)) for order in range(3, 8)], [1, 1, 3, 2, 5])

    def test_out_of_range_order(self):
        for order in (2, 8):
            with self.assertRaises(QuandleError):
                catalog_indecomposable(order)

    def test_all_entries_are_indecomposable_quandles(self):
        for name in CATALOG:
            quandle = catalog_quandle(name)
            with self.subTest(name=name):
                self.assertTrue(verify_quandle_axioms(quandle))
                self.assertEqual(len(orbit_components(quandle)), 1)

    def test_qs6_tables_from_one_based_matrices(self):
        expected = {
            'QS6': [
                [0, 0, 4, 5, 2, 3],
                [1, 1, 5, 4, 3, 2],
                [4, 5, 2, 2, 0, 1],
                [5, 4, 3, 3, 1, 0],
                [2, 3, 0, 1, 4, 4],
                [3, 2, 1, 0, 5, 5],
            ],
            'QS6p': [
                [0, 0, 5, 4, 2, 3],
                [1, 1, 4, 5, 3, 2],
                [4, 5, 2, 2, 1, 0],
                [5, 4, 3, 3, 0, 1],
                [3, 2, 0, 1, 4, 4],
                [2, 3, 1, 0, 5, 5],
            ],
        }
        for name, matrix in (('QS6', QS6_MATRIX), ('QS6p', QS6P_MATRIX)):
            with self.subTest(name=name):
                self.assertEqual({v for row in matrix for v in row}, set(range(1, 7)))
                self.assertEqual([list(row) for row in shift_one_based(matrix)], expected[name])
                quandle = catalog_quandle(name)
                self.assertEqual(quandle.rows(), expected[name])
                self.assertTrue(verify_quandle_axioms(quandle).passed)

    def test_qs6_maps_onto_dihedral_three(self):
        z3 = catalog_quandle('Z3_1x1')
        for name in ('QS6', 'QS6p'):
            with self.subTest(name=name):
                self.assertTrue(is_homomorphism(QS6_TO_Z3, catalog_quandle(name), z3))

    def test_unknown_name(self):
        with self.assertRaises(QuandleError):
            catalog_quandle('Z9_1x1')


class HomomorphismTests(SimpleTestCase):

    def test_identity(self):
        quandle = catalog_quandle('Z7_1x3')
        self.assertTrue(is_homomorphism(range(7), quandle, quandle))

    def test_constant_maps(self):
        source, target = catalog_quandle('QS6'), catalog_quandle('S4')
        for value in range(4):
            with self.subTest(value=value):
                self.assertTrue(is_homomorphism([value] * 6, source, target))

    def test_non_homomorphism(self):
        quandle = catalog_quandle('Z5_1x1')
        self.assertFalse(is_homomorphism([0, 1, 2, 3, 3], quandle, quandle))


class QuandleJsonTests(SimpleTestCase):

    def test_json_document(self):
        data = quandle_to_json(catalog_quandle('S4'))
        self.assertEqual(data['order'], 4)
        self.assertEqual(data['name'], 'S4')
        self.assertEqual(quandle_from_json(json.dumps(data)), catalog_quandle('S4'))

    def test_declared_order_must_match(self):
        with self.assertRaises(MalformedTableError):
            quandle_from_json({'order': 3, 'table': [[0, 1], [1, 0]]})

    def test_invalid_json(self):
        with self.assertRaises(MalformedTableError):
            quandle_from_json('{"order": 2, "table": ')
