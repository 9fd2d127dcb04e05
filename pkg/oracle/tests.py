from django.test import SimpleTestCase, override_settings, tag

from chartable.reports import PASS, SKIPPED
from chartable.table import full_table, identity_class, steinberg_label, trivial_label
from combinatorics.partitions import ColoredPartition, gauss_binomial
from glchars.exceptions import LabelError, ResourceBoundError
from orbits.fields import as_poly
from orbits.orbits import value_orbit

from .checks import (
    flags, induce_product, multiplicity, permutation_character, restrict, subspaces, verify_brute,
    verify_class_data, verify_induction, verify_permutation_character,
)
from .matrices import (
    class_type, enumerate_group, fq_tables, generators, identity_matrix, inverse, matmul, smith_normal_form,
)


class MatrixTests(SimpleTestCase):

    def test_inversa(self):
        for q in (2, 3, 4):
            tables = fq_tables(q)
            for g in generators(3, q):
                self.assertEqual(matmul(g, inverse(g, 3, tables), 3, tables), identity_matrix(3))

    def test_singular(self):
        with self.assertRaises(LabelError):
            inverse((1, 1, 1, 1), 2, fq_tables(2))

    def test_smith(self):
        one, t = as_poly([1], 2), as_poly([0, 1], 2)
        factors = smith_normal_form([[t, one], [one, t]])
        self.assertEqual([f.degree for f in factors], [0, 2])
        self.assertEqual(factors[1], as_poly([1, 0, 1], 2))     # t² + 1 = (t + 1)²

    def test_tipos(self):
        q = 2
        f1, f2 = value_orbit(q, 1, 0), value_orbit(q, 2, 1)
        self.assertEqual(class_type(identity_matrix(3), 3, q), ColoredPartition({f1: (1, 1, 1)}))
        self.assertEqual(class_type((1, 1, 0, 1), 2, q), ColoredPartition({f1: (2,)}))
        self.assertEqual(class_type((0, 1, 1, 1), 2, q), ColoredPartition({f2: (1,)}))
        # -I en F_3: autovalor 2, orbita de rep 1
        self.assertEqual(class_type((2, 0, 0, 2), 2, 3), ColoredPartition({value_orbit(3, 1, 1): (1, 1)}))


class GroupTests(SimpleTestCase):

    def test_gl22(self):
        group = enumerate_group(2, 2)
        self.assertEqual(group.order, 6)
        self.assertEqual(sorted(len(c) for c in group.classes), [1, 2, 3])

    def test_gl13(self):
        group = enumerate_group(1, 3)
        self.assertEqual(group.order, 2)
        self.assertEqual(len(group.classes), 2)

    def test_gl32(self):
        group = enumerate_group(3, 2)
        self.assertEqual(group.order, 168)
        self.assertEqual(len(group.classes), 6)

    @override_settings(GLCHARS_MAX_GROUP_ORDER=100)
    def test_limite(self):
        with self.assertRaises(ResourceBoundError):
            enumerate_group(3, 2)
        report = verify_class_data(3, 2)
        self.assertEqual([c.status for c in report], [SKIPPED])

    def test_datos_de_clase(self):
        for n, q in ((1, 3), (2, 2), (2, 3), (3, 2)):
            report = verify_class_data(n, q)
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(report['class_labels'].status, PASS)

    def test_s3(self):
        # GL_2(F_2) ≅ S_3: la representación estándar vale (2, 0, −1) en (1, trasposición, 3-ciclo)
        group = enumerate_group(2, 2)
        table = full_table(2, 2)
        expected = {1: 2, 2: 0, 3: -1}
        for cls, label in zip(group.classes, group.class_labels()):
            order = group.element_order(cls[0])
            self.assertEqual(table.value(steinberg_label(2, 2), label), expected[order])
            self.assertEqual(table.value(trivial_label(2, 2), label), 1)


class SubspaceTests(SimpleTestCase):

    def test_recuento(self):
        for n, q in ((2, 2), (3, 2), (2, 3), (4, 2)):
            for k in range(n + 1):
                self.assertEqual(len(list(subspaces(n, k, q))), gauss_binomial(n, k, q))

    def test_banderas(self):
        # banderas completas de F_2^3: [3]_2! = 21
        self.assertEqual(len(list(flags(3, (1, 1, 1), 2))), 21)
        self.assertEqual(len(list(flags(2, (1, 1), 3))), 4)
        with self.assertRaises(LabelError):
            list(flags(3, (2, 2), 2))

    def test_restriccion(self):
        tables = fq_tables(2)
        transvection = (1, 1, 0, 1)
        fixed = [s for s in subspaces(2, 1, 2) if restrict(transvection, s, tables) is not None]
        self.assertEqual(len(fixed), 1)
        sub, quotient = restrict(transvection, fixed[0], tables)
        self.assertEqual((sub, quotient), ((1,), (1,)))


class InductionTests(SimpleTestCase):

    def test_gl1_gl1(self):
        for q in (2, 3):
            report = verify_induction(1, 1, q)
            self.assertTrue(report.passed, report.failures)

    def test_gl1_gl2(self):
        self.assertTrue(verify_induction(1, 2, 2).passed)

    def test_unidad(self):
        group = enumerate_group(2, 3)
        for mu in ({value_orbit(3, 1, 0): (2,)}, {value_orbit(3, 2, 1): (1,)}):
            mu = ColoredPartition(mu)
            induced = induce_product(0, 2, ColoredPartition(), mu, 3, group)
            self.assertEqual({label for label, v in induced.items() if v}, {mu})
            self.assertEqual(induced[mu], 1)

    def test_pesos(self):
        with self.assertRaises(LabelError):
            induce_product(1, 1, identity_class(2, 2), identity_class(1, 2), 2)


class PermutationCharacterTests(SimpleTestCase):

    def test_rectas(self):
        for q in (2, 3):
            values = permutation_character(2, q, (1, 1))
            self.assertEqual(values[identity_class(2, q)], q + 1)

    def test_gl22(self):
        table = full_table(2, 2)
        function = permutation_character(2, 2, (1, 1))
        self.assertEqual(multiplicity(table, function, trivial_label(2, 2)), 1)
        self.assertEqual(multiplicity(table, function, steinberg_label(2, 2)), 1)
        self.assertTrue(verify_permutation_character(table, (1, 1)).passed)

    def test_caracteres_propios(self):
        for n, q in ((2, 3), (3, 2)):
            table = full_table(n, q)
            self.assertTrue(verify_permutation_character(table, (1, n - 1)).passed)

    @tag('slow')
    def test_banderas_completas_gl32(self):
        self.assertTrue(verify_permutation_character(full_table(3, 2), (1, 1, 1)).passed)

    def test_verificacion_completa(self):
        report = verify_brute(full_table(2, 3))
        self.assertTrue(report.passed, report.failures)
        self.assertGreaterEqual(len(report), 5)
