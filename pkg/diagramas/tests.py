import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from .alexander import (
    ONE,
    AlexanderError,
    LaurentPoly,
    alexander_polynomial,
    cofactor_determinant,
    eval_mod,
    minor_determinant,
    relation_matrix_t,
)
from .diagram import (
    DiagramError,
    OrientedDiagram,
    available_diagrams,
    diagram_from_json,
    diagram_from_pd,
    diagram_to_json,
    load_diagram,
    named_diagram,
    parse_oriented_pd,
    parse_triples,
    pd_from_gauss,
    serialize_triples,
    validate,
)

TREFOIL = [(0, 2, 1), (1, 0, 2), (2, 1, 0)]
TREFOIL_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
HOPF_PD = "X[4,1,3,2], X[2,3,1,4]"
PHI_15 = (1, -1, 0, 1, -1, 1, 0, -1, 1)
SMALL_KNOTS = ('trefoil', 'trefoil-kink', 'trefoil-pd', 'figure-eight', 'unknot-2')


class ValidateTests(SimpleTestCase):

    def test_trefoil_is_valid(self):
        report = validate(OrientedDiagram.from_triples(TREFOIL))
        self.assertTrue(report.valid)
        self.assertIsNone(report.invariant)

    def test_single_kink(self):
        self.assertTrue(validate(OrientedDiagram.from_triples([(0, 0, 0)])))

    def test_failures(self):
        cases = [
            ([], 'nonempty', None),
            ([(0, 1, 3), (1, 2, 0), (2, 0, 1)], 'range', 0),
            ([(0, 1, 1), (1, 0, 0)], 'distinct', 0),
            ([(0, 0, 1), (1, 0, 1), (2, 2, 1)], 'slots', 0),
            ([(0, 1, 0), (1, 0, 1), (2, 3, 2), (3, 2, 3)], 'connected', None),
            ([(2, 1, 0), (3, 0, 1), (0, 3, 2), (1, 2, 3)], 'component', None),
        ]
        for triples, invariant, crossing in cases:
            with self.subTest(invariant=invariant):
                report = validate(OrientedDiagram.from_triples(triples))
                self.assertFalse(report.valid)
                self.assertEqual(report.invariant, invariant)
                self.assertEqual(report.crossing, crossing)

    def test_raise_if_invalid_keeps_crossing(self):
        report = validate(OrientedDiagram.from_triples([(0, 1, 3), (1, 2, 0), (2, 0, 1)]))
        with self.assertRaises(DiagramError) as ctx:
            report.raise_if_invalid()
        self.assertEqual(ctx.exception.crossing, 0)
        self.assertIn('out of range', str(ctx.exception))


class TriplesFormatTests(SimpleTestCase):

    def test_parse_with_comments_and_blank_lines(self):
        text = "# trébol\n\nX 0 2 1  # primer cruce\nX 1 0 2\nX 2 1 0\n"
        self.assertEqual(parse_triples(text).triples(), TREFOIL)

    def test_syntax_errors_report_line(self):
        cases = [
            ("X 0 2", 1, "expected 3 arc ids"),
            ("X 0 2 1\nY 1 0 2", 2, "expected 'X'"),
            ("# c\n\nX 0 a 1", 3, "invalid arc id"),
        ]
        for text, line, fragment in cases:
            with self.subTest(text=text):
                with self.assertRaises(DiagramError) as ctx:
                    parse_triples(text)
                self.assertEqual(ctx.exception.line, line)
                self.assertTrue(str(ctx.exception).startswith(f"line {line}: "))
                self.assertIn(fragment, str(ctx.exception))

    def test_no_crossings(self):
        for text in ("", "# sólo un comentario\n"):
            with self.subTest(text=text):
                with self.assertRaisesMessage(DiagramError, "no crossings"):
                    parse_triples(text)

    def test_invalid_diagram_is_rejected_after_parsing(self):
        with self.assertRaisesMessage(DiagramError, "right equals left"):
            parse_triples("X 0 1 1\nX 1 0 0")

    def test_serialize_round_trip(self):
        diagram = named_diagram('trefoil-kink')
        text = serialize_triples(diagram)
        self.assertTrue(text.startswith("# trefoil-kink\n"))
        self.assertEqual(parse_triples(text).triples(), diagram.triples())


class PDFormatTests(SimpleTestCase):

    def test_trefoil_pd(self):
        diagram = diagram_from_pd(TREFOIL_PD)
        self.assertEqual(diagram.arc_count, 3)
        self.assertTrue(validate(diagram))
        self.assertEqual(alexander_polynomial(diagram).coeffs, (1, -1, 1))

    def test_wrapped_and_multiline_pd(self):
        text = "PD[X[1,4,2,5],\n   X[3,6,4,1],\n   X[5,2,6,3]]"
        self.assertEqual(parse_oriented_pd(text).triples(), diagram_from_pd(TREFOIL_PD).triples())

    def test_links_are_rejected(self):
        with self.assertRaisesMessage(DiagramError, "knots only"):
            parse_oriented_pd(HOPF_PD)

    def test_label_errors(self):
        cases = [
            ("X[1,2,3]", "expected 4 edge labels"),
            ("X[1,2,3,4]", "out of range"),
            ("X[1,4,2,5], X[3,6,4,1], X[5,2,6,1]", "exactly twice"),
            ("X[1,4,2,5], X[3,x,4,1], X[5,2,6,3]", "invalid edge label"),
        ]
        for text, fragment in cases:
            with self.subTest(text=text):
                with self.assertRaisesMessage(DiagramError, fragment):
                    parse_oriented_pd(text)

    def test_stray_text_reports_line(self):
        with self.assertRaises(DiagramError) as ctx:
            parse_oriented_pd("X[1,4,2,5],\nX[3,6,4,1] Y\nX[5,2,6,3]")
        self.assertEqual(ctx.exception.line, 2)
        self.assertIn("unexpected text 'Y'", str(ctx.exception))

    def test_inconsistent_orientation(self):
        codes = [(2, 4, 1, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
        with self.assertRaises(DiagramError) as ctx:
            diagram_from_pd(codes)
        self.assertEqual(ctx.exception.crossing, 0)
        self.assertIn("inconsistent orientation", str(ctx.exception))

    def test_gauss_walk_needs_over_and_under_passes(self):
        with self.assertRaises(DiagramError):
            pd_from_gauss([('a', True), ('b', False)], {'a': 1, 'b': 1})

    def test_gauss_walk_of_trefoil(self):
        passes = [('a', True), ('b', False), ('c', True), ('a', False), ('b', True), ('c', False)]
        codes = pd_from_gauss(passes, {'a': -1, 'b': -1, 'c': -1})
        self.assertEqual(len(codes), 3)
        self.assertEqual(alexander_polynomial(diagram_from_pd(codes)).coeffs, (1, -1, 1))


class DiagramJsonTests(SimpleTestCase):

    def test_json_document(self):
        diagram = named_diagram('figure-eight')
        data = diagram_to_json(diagram)
        self.assertEqual(data['name'], 'figure-eight')
        self.assertEqual(len(data['crossings']), 4)
        self.assertEqual(diagram_from_json(json.dumps(data)), diagram)

    def test_bad_documents(self):
        for data in ('{"crossings": [', {'crossings': [{'over': 0}]}, {'arcs': []}):
            with self.subTest(data=data):
                with self.assertRaises(DiagramError):
                    diagram_from_json(data)


class BundledDiagramTests(SimpleTestCase):

    def test_available(self):
        names = available_diagrams()
        for name in ('trefoil', 'figure-eight', '10_124', 'unknot-1'):
            self.assertIn(name, names)

    def test_all_bundled_diagrams_are_valid(self):
        for name in available_diagrams():
            with self.subTest(name=name):
                self.assertTrue(validate(named_diagram(name)))

    def test_unknown_name(self):
        with self.assertRaisesMessage(DiagramError, "available"):
            named_diagram('5_2')

    def test_suffix_decides_format(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'trebol.pd'
            path.write_text("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]\n", encoding='utf-8')
            self.assertEqual(load_diagram(path).name, 'trebol')
            other = Path(directory) / 'trebol.txt'
            other.write_text("X 0 2 1\n", encoding='utf-8')
            with self.assertRaisesMessage(DiagramError, "cannot infer"):
                load_diagram(other)
            self.assertEqual(load_diagram(Path(directory) / 'trebol.pd', fmt='pd').arc_count, 3)

    def test_missing_file(self):
        with self.assertRaisesMessage(DiagramError, "cannot read"):
            load_diagram('/no/existe/nudo.tri')


class LaurentPolyTests(SimpleTestCase):

    def test_strips_zeros(self):
        poly = LaurentPoly((0, 0, 1, 2, 0))
        self.assertEqual(poly.coeffs, (1, 2))
        self.assertEqual(poly.low, 2)
        self.assertTrue(LaurentPoly((0, 0)).is_zero)

    def test_text(self):
        cases = [
            ((1, -1, 1), 0, "t^2 - t + 1"),
            ((-1, 3, -1), 0, "-t^2 + 3t - 1"),
            ((2, -3, 2), 0, "2t^2 - 3t + 2"),
            ((1,), -1, "t^-1"),
            ((), 0, "0"),
        ]
        for coeffs, low, text in cases:
            with self.subTest(text=text):
                self.assertEqual(str(LaurentPoly(coeffs, low)), text)

    def test_arithmetic(self):
        a = LaurentPoly((1, 1))
        b = LaurentPoly((-1, 1))
        self.assertEqual((a * b).coeffs, (-1, 0, 1))
        self.assertEqual(a + b, LaurentPoly((0, 2)))
        self.assertTrue((a - a).is_zero)
        self.assertEqual((3 * a).coeffs, (3, 3))

    def test_normalized(self):
        raw = LaurentPoly((1, -1, 1), -3) * -1
        self.assertEqual(raw.normalized(), LaurentPoly((1, -1, 1)))
        with self.assertRaises(AlexanderError):
            LaurentPoly(()).normalized()

    def test_knot_form(self):
        self.assertEqual(LaurentPoly((1, -1, 1)).knot_form_violations(), [])
        self.assertTrue(LaurentPoly((1, 1)).knot_form_violations())
        self.assertTrue(LaurentPoly((2, -3, 1)).knot_form_violations())

    def test_evaluation(self):
        trefoil = LaurentPoly((1, -1, 1))
        self.assertEqual(trefoil(-1), 3)
        self.assertEqual(LaurentPoly((-1, 3, -1))(-1), -5)
        self.assertEqual(LaurentPoly((1,), -2)(-1), 1)
        with self.assertRaises(AlexanderError):
            LaurentPoly((1,), -1)(2)

    def test_eval_mod(self):
        self.assertEqual(eval_mod(LaurentPoly((1, -1, 1)), -1, 3), 0)
        self.assertEqual(eval_mod(LaurentPoly(PHI_15), -21, 31), 0)
        self.assertEqual(LaurentPoly((-1, 3, -1)).eval_mod(-4, 29), 0)
        with self.assertRaises(ValueError):
            eval_mod(ONE, 0, 1)

    def test_eval_mod_agrees_with_exact_value(self):
        poly = LaurentPoly(PHI_15)
        for x in range(-10, 11):
            for m in (2, 3, 7, 31, 97):
                with self.subTest(x=x, m=m):
                    self.assertEqual(eval_mod(poly, x, m), poly(x) % m)


class AlexanderPolynomialTests(SimpleTestCase):

    def test_known_polynomials(self):
        cases = {
            'unknot-1': (1,),
            'unknot-2': (1,),
            'trefoil': (1, -1, 1),
            'trefoil-kink': (1, -1, 1),
            'trefoil-pd': (1, -1, 1),
            'figure-eight': (-1, 3, -1),
            '10_124': PHI_15,
        }
        for name, coeffs in cases.items():
            with self.subTest(name=name):
                delta = alexander_polynomial(named_diagram(name))
                self.assertEqual(delta.coeffs, coeffs)
                self.assertEqual(delta.low, 0)

    def test_knot_polynomial_identities(self):
        for name in available_diagrams():
            delta = alexander_polynomial(named_diagram(name))
            with self.subTest(name=name):
                self.assertEqual(delta(1), 1)
                self.assertEqual(delta.coeffs, delta.coeffs[::-1])
                self.assertEqual(delta.span % 2, 0)
                self.assertEqual(delta.coeffs[delta.span // 2] % 2, 1)

    def test_relation_rows_sum_to_zero(self):
        matrix = relation_matrix_t(named_diagram('figure-eight'))
        for row in matrix.rows():
            total = LaurentPoly(())
            for entry in row:
                total = total + entry
            self.assertTrue(total.is_zero)

    def test_every_first_minor_gives_the_same_polynomial(self):
        for name in SMALL_KNOTS:
            diagram = named_diagram(name)
            delta = alexander_polynomial(diagram)
            matrix = relation_matrix_t(diagram)
            for row in range(matrix.size):
                for col in range(matrix.size):
                    with self.subTest(name=name, row=row, col=col):
                        self.assertEqual(minor_determinant(matrix, row, col).normalized(), delta)

    def test_cofactor_expansion_matches_fraction_free_elimination(self):
        for name in SMALL_KNOTS:
            matrix = relation_matrix_t(named_diagram(name))
            last = matrix.size - 1
            rows = [row[:last] for row in matrix.rows()[:last]]
            with self.subTest(name=name):
                self.assertEqual(cofactor_determinant(rows), minor_determinant(matrix, last, last))

    def test_cofactor_size_limit(self):
        with self.assertRaises(AlexanderError):
            cofactor_determinant([[ONE] * 9 for _ in range(9)])

    def test_single_crossing_minor_is_one(self):
        matrix = relation_matrix_t(named_diagram('unknot-1'))
        self.assertEqual(minor_determinant(matrix, 0, 0), ONE)

    def test_evaluate_reduces_modulo(self):
        matrix = relation_matrix_t(named_diagram('trefoil'))
        self.assertEqual(matrix.evaluate(-1)[0], [-2, 1, 1])
        self.assertEqual(matrix.evaluate(-1, modulus=3)[0], [1, 1, 1])

    def test_entry_matches_rows(self):
        matrix = relation_matrix_t(named_diagram('figure-eight'))
        rows = matrix.rows()
        for row in range(matrix.size):
            for col in range(matrix.size):
                with self.subTest(row=row, col=col):
                    self.assertEqual(matrix.entry(row, col), rows[row][col])

    def test_inverse_evaluation_symmetry(self):
        # Δ palíndromo: Δ(-k^-1) = (-k^-1)^d Δ(-k) mod p
        for name in available_diagrams():
            delta = alexander_polynomial(named_diagram(name))
            for p in (3, 5, 7, 11, 13, 31):
                for k in range(1, p):
                    kbar = pow(k, -1, p)
                    with self.subTest(name=name, p=p, k=k):
                        self.assertEqual(
                            eval_mod(delta, -kbar, p),
                            pow(-kbar % p, delta.span, p) * eval_mod(delta, -k, p) % p,
                        )
