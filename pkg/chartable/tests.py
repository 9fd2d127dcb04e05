from fractions import Fraction

import jsonschema
from django.test import SimpleTestCase, override_settings, tag
from rest_framework.renderers import JSONRenderer

from combinatorics.partitions import ColoredPartition
from glchars.exceptions import LabelError, ResourceBoundError
from orbits.orbits import character_orbit, orbits_of_degree, pairing, value_orbit, CHARACTER

from .reports import FAIL, PASS, SKIPPED, Report
from .serializers import CharacterTableSerializer, ColoredPartitionSerializer, ReportSerializer, validate_table_json
from .table import (
    GENERAL, PRINTED, centralizer_order, char_to_p, character_labels, character_value, check_pairing_independence,
    class_labels, class_size, class_to_Q, compare_paths, conductor, conjugate_label, degree, fourier_power_sum,
    full_table, group_order, identity_class, inner, mixed_pairing, steinberg_label, trivial_label,
    unipotent_classes, unipotent_labels, verify_orthogonality, verify_table, working_field,
)


def cls(q, *pairs):
    """cls(2, ((1, 0), (2,))) -> {f[d=1,rep=0]: 2}"""
    return ColoredPartition({value_orbit(q, d, rep): lam for (d, rep), lam in pairs})


def char(q, *pairs):
    return ColoredPartition({character_orbit(q, d, rep): lam for (d, rep), lam in pairs})


class GroupDataTests(SimpleTestCase):

    def test_orden(self):
        for q in (2, 3, 4, 5):
            self.assertEqual(group_order(1, q), q - 1)
        self.assertEqual(group_order(2, 2), 6)
        self.assertEqual(group_order(2, 3), 48)
        self.assertEqual(group_order(3, 2), 168)
        self.assertEqual(group_order(0, 7), 1)

    def test_conductor(self):
        self.assertEqual(conductor(0, 2), 1)
        self.assertEqual(conductor(2, 2), 3)
        self.assertEqual(conductor(2, 3), 8)
        self.assertEqual(conductor(3, 2), 21)

    def test_centralizadores(self):
        self.assertEqual(centralizer_order(identity_class(2, 2)), 6)
        transvection = cls(2, ((1, 0), (2,)))
        self.assertEqual(centralizer_order(transvection), 2)
        self.assertEqual(class_size(transvection), 3)
        order_three = cls(2, ((2, 1), (1,)))
        self.assertEqual(centralizer_order(order_three), 3)
        self.assertEqual(class_size(order_three), 2)

    def test_etiquetas(self):
        for n, q in ((1, 2), (1, 3), (2, 2), (2, 3), (3, 2)):
            classes, characters = class_labels(n, q), character_labels(n, q)
            self.assertEqual(len(classes), len(characters))
            self.assertEqual(sum(class_size(mu, q) for mu in classes if mu), group_order(n, q))
            self.assertIn(identity_class(n, q), classes)
        self.assertEqual(len(class_labels(2, 3)), 8)
        self.assertEqual(len(class_labels(3, 2)), 6)
        self.assertEqual(len(unipotent_classes(4, 2)), 5)
        self.assertEqual(len(unipotent_labels(3, 3)), 3)

    def test_tipo_de_orbita(self):
        with self.assertRaises(LabelError):
            centralizer_order(char(2, ((1, 0), (1,))))
        with self.assertRaises(LabelError):
            degree(cls(2, ((1, 0), (1,))))


class DegreeTests(SimpleTestCase):

    def test_trivial_y_steinberg(self):
        for n in range(1, 5):
            for q in (2, 3):
                self.assertEqual(degree(trivial_label(n, q)), 1)
                self.assertEqual(degree(steinberg_label(n, q)), q ** (n * (n - 1) // 2))

    def test_cuspidal(self):
        for q in (2, 3, 4):
            for phi in orbits_of_degree(q, 2, CHARACTER):
                self.assertEqual(degree(ColoredPartition({phi: (1,)})), q - 1)

    def test_suma_de_cuadrados(self):
        for n, q in ((1, 3), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3)):
            self.assertEqual(sum(degree(label) ** 2 for label in character_labels(n, q)), group_order(n, q))


class ExpansionTests(SimpleTestCase):

    def test_fourier_grado_uno(self):
        field = working_field(1, 2)
        phi0, f1 = character_orbit(2, 1, 0), value_orbit(2, 1, 0)
        expansion = fourier_power_sum(phi0, 1, field)
        self.assertEqual(expansion.terms, {ColoredPartition({f1: (1,)}): field.one})

    def test_signo(self):
        field = working_field(2, 2)
        phi, f = character_orbit(2, 2, 1), value_orbit(2, 2, 1)
        expansion = fourier_power_sum(phi, 1, field)
        self.assertEqual(expansion.coefficient(ColoredPartition({f: (1,)})), pairing(phi, f, 2, field) * -2)

    def test_graduacion(self):
        q = 3
        field = working_field(3, q)
        for label in character_labels(3, q):
            for key, _ in char_to_p(label, field).items():
                self.assertEqual(key.weight, 3)

    def test_clase_identidad(self):
        # q^{n(1^n)} Q_{(1^n)}.1 = ψ_n(q) e_n
        q = 3
        f1 = value_orbit(q, 1, 0)
        expected = {
            ColoredPartition({f1: (1, 1)}): Fraction(8),
            ColoredPartition({f1: (2,)}): Fraction(-8),
        }
        self.assertEqual(class_to_Q(identity_class(2, q)).terms, expected)

    def test_metrica(self):
        # el camino por la métrica completa coincide con el dual de clase
        q = 2
        field = working_field(2, q)
        for label in character_labels(2, q):
            for mu in class_labels(2, q):
                self.assertEqual(inner(char_to_p(label, field), class_to_Q(mu)), character_value(label, mu, field))

    def test_emparejamiento_mixto(self):
        q = 3
        phi0, f1 = character_orbit(q, 1, 0), value_orbit(q, 1, 0)
        field = working_field(2, q)
        self.assertEqual(
            mixed_pairing(ColoredPartition({phi0: (1,)}), ColoredPartition({f1: (1,)}), field), Fraction(1, q - 1)
        )
        self.assertTrue(
            mixed_pairing(ColoredPartition({phi0: (2,)}), ColoredPartition({f1: (1,)}), field).is_zero()
        )

    def test_independencia_del_representante(self):
        self.assertGreater(check_pairing_independence(2, 4), 0)
        self.assertGreater(check_pairing_independence(3, 2), 0)


class GL22Tests(SimpleTestCase):
    """GL_2(F_2) ≅ S_3."""

    @classmethod
    def setUpClass(cls_):
        super().setUpClass()
        cls_.table = full_table(2, 2)

    def test_dimensiones(self):
        self.assertEqual(len(self.table), 3)
        self.assertEqual(sorted(self.table.degrees), [1, 1, 2])
        self.assertEqual(sorted(self.table.sizes), [1, 2, 3])

    def test_steinberg(self):
        st = steinberg_label(2, 2)
        identity = identity_class(2, 2)
        transvection = cls(2, ((1, 0), (2,)))
        order_three = cls(2, ((2, 1), (1,)))
        self.assertEqual([self.table.value(st, mu) for mu in (identity, transvection, order_three)], [2, 0, -1])

    def test_signo(self):
        sign = ColoredPartition({character_orbit(2, 2, 1): (1,)})
        self.assertEqual(self.table.value(sign, cls(2, ((1, 0), (2,)))), -1)
        self.assertEqual(self.table.value(sign, cls(2, ((2, 1), (1,)))), 1)

    def test_verificacion(self):
        report = verify_table(self.table)
        self.assertTrue(report.passed, [c for c in report.failures])

    def test_caminos(self):
        self.assertTrue(compare_paths(self.table, GENERAL).passed)


class GL23Tests(SimpleTestCase):

    @classmethod
    def setUpClass(cls_):
        super().setUpClass()
        cls_.table = full_table(2, 3)

    def test_dimensiones(self):
        self.assertEqual(len(self.table), 8)
        self.assertEqual(sum(d * d for d in self.table.degrees), 48)
        self.assertEqual(sorted(self.table.degrees), [1, 1, 2, 2, 2, 3, 3, 4])

    def test_ortogonalidad(self):
        report = verify_orthogonality(self.table)
        self.assertEqual([c.status for c in report], [PASS, PASS])

    def test_enteros_algebraicos(self):
        self.assertTrue(verify_table(self.table)['algebraic_integers'].status == PASS)

    def test_caracter_trivial(self):
        self.assertTrue(all(v == 1 for v in self.table.row(trivial_label(2, 3))))

    def test_identidad_es_el_grado(self):
        identity = self.table.class_index(identity_class(2, 3))
        for row, d in zip(self.table.values, self.table.degrees):
            self.assertEqual(row[identity], d)

    def test_conjugado(self):
        for label in self.table.characters:
            conj = conjugate_label(label)
            for value, other in zip(self.table.row(label), self.table.row(conj)):
                self.assertEqual(other, value.conjugate())

    def test_formula_unipotente(self):
        report = compare_paths(self.table, PRINTED, unipotent_labels(2, 3), unipotent_classes(2, 3))
        self.assertTrue(report.passed)

    def test_formula_general(self):
        labels = self.table.characters[:4]
        self.assertTrue(compare_paths(self.table, GENERAL, labels).passed)

    def test_formula_impresa_diverge(self):
        # fuera del bloque unipotente la correspondencia por exponentes no basta
        report = compare_paths(self.table, PRINTED, [trivial_label(2, 3)])
        check = report['paths_printed']
        self.assertEqual(check.status, FAIL)
        self.assertGreater(len(check.details['divergences']), 0)


class TableTests(SimpleTestCase):

    def test_n_cero(self):
        table = full_table(0, 2)
        self.assertEqual(len(table), 1)
        self.assertEqual(table.degrees, [1])
        self.assertEqual(table.values[0][0], 1)

    def test_gl32(self):
        table = full_table(3, 2, threads=2)
        self.assertEqual(len(table), 6)
        self.assertEqual(sum(d * d for d in table.degrees), 168)
        self.assertIn(8, table.degrees)
        self.assertTrue(verify_table(table).passed)

    def test_determinista(self):
        first, second = full_table(2, 3, threads=1), full_table(2, 3, threads=3)
        self.assertEqual(first.values, second.values)
        self.assertEqual(first.characters, second.characters)

    def test_pesos_distintos(self):
        with self.assertRaises(LabelError):
            character_value(trivial_label(2, 2), identity_class(3, 2))

    @override_settings(GLCHARS_MAX_CONDUCTOR_DEGREE=4)
    def test_limite_de_conductor(self):
        with self.assertRaises(ResourceBoundError):
            full_table(3, 3)

    @tag('slow')
    def test_gl42(self):
        table = full_table(4, 2)
        self.assertEqual(len(table.classes), len(table.characters))
        self.assertEqual(sum(d * d for d in table.degrees), group_order(4, 2))
        self.assertEqual(verify_orthogonality(table)['first_orthogonality'].status, PASS)


class ReportTests(SimpleTestCase):

    def test_estados(self):
        report = Report()
        report.add('a', True)
        report.skip('b', 'bound')
        self.assertTrue(report.passed)
        report.add('c', False, {'x': 1})
        self.assertFalse(report.passed)
        self.assertEqual([c.status for c in report], [PASS, SKIPPED, FAIL])
        data = ReportSerializer(report).data
        self.assertEqual(data['checks'][2], {'check': 'c', 'status': FAIL, 'details': {'x': 1}, 'advisory': False})
        self.assertFalse(data['passed'])

    def test_informativas_no_fallan(self):
        report = Report()
        report.add('a', True)
        report.add('b', False, {'x': 1}, advisory=True)
        self.assertTrue(report.passed)
        self.assertEqual(report.failures, [])
        self.assertEqual([c.check for c in report.findings], ['b'])
        self.assertTrue(ReportSerializer(report).data['passed'])

    def test_caminos_informativos(self):
        table = full_table(2, 3)
        report = compare_paths(table, PRINTED, [trivial_label(2, 3)], advisory=True)
        self.assertTrue(report.passed)
        self.assertEqual(report['paths_printed'].status, FAIL)
        self.assertEqual(len(report.findings), 1)


class SerializerTests(SimpleTestCase):

    def test_esquema(self):
        data = CharacterTableSerializer(full_table(2, 2)).data
        validate_table_json(data)
        data['values'][0] = data['values'][0][:2]
        with self.assertRaises(jsonschema.ValidationError):
            validate_table_json(data)

    def test_bytes_deterministas(self):
        render = JSONRenderer().render
        self.assertEqual(
            render(CharacterTableSerializer(full_table(2, 2)).data),
            render(CharacterTableSerializer(full_table(2, 2)).data),
        )

    def test_etiquetas(self):
        serializer = ColoredPartitionSerializer(
            data=[{'orbit': {'d': 1, 'rep': 0}, 'partition': [1, 1]}],
            context={'q': 3, 'kind': 'value'},
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data, identity_class(2, 3))

        by_poly = ColoredPartitionSerializer(
            data=[{'orbit': {'poly': [1, 1, 1]}, 'partition': [1]}], context={'q': 2},
        )
        self.assertTrue(by_poly.is_valid(), by_poly.errors)
        self.assertEqual(by_poly.validated_data, cls(2, ((2, 1), (1,))))

        wrong_kind = ColoredPartitionSerializer(
            data=[{'orbit': {'kind': 'character', 'q': 2, 'd': 1, 'rep': 0}, 'partition': [1]}],
            context={'kind': 'value'},
        )
        self.assertFalse(wrong_kind.is_valid())

        bad_partition = ColoredPartitionSerializer(
            data=[{'orbit': {'d': 1, 'rep': 0}, 'partition': [1, 2]}], context={'q': 2, 'kind': 'value'},
        )
        self.assertFalse(bad_partition.is_valid())

    def test_ida_y_vuelta(self):
        label = char(3, ((1, 1), (2,)), ((2, 1), (1,)))
        data = ColoredPartitionSerializer(label).data
        serializer = ColoredPartitionSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data, label)
