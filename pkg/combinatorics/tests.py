from fractions import Fraction

from django.test import SimpleTestCase

from glchars.exceptions import LabelError

from .partitions import (
    ColoredPartition, Partition, a_q, b_t, conjugate, enumerate_colored, enumerate_partitions,
    gauss_binomial, hook_lengths, is_vertical_strip, n_stat, partitions_up_to, z_stat, z_t,
)


class PartitionTests(SimpleTestCase):

    def test_validacion(self):
        self.assertEqual(Partition((2, 1, 0, 0)), Partition((2, 1)))
        with self.assertRaises(LabelError):
            Partition((1, 2))
        with self.assertRaises(LabelError):
            Partition((2, -1))

    def test_parse(self):
        self.assertEqual(Partition.parse('2,1,1'), Partition((2, 1, 1)))
        self.assertEqual(Partition.parse(''), Partition())
        with self.assertRaises(LabelError):
            Partition.parse('2,a')

    def test_conjugada(self):
        self.assertEqual(conjugate((3, 1)), (2, 1, 1))
        self.assertEqual(conjugate(()), ())
        self.assertEqual(conjugate((2, 2)), (2, 2))
        for lam in enumerate_partitions(6):
            self.assertEqual(conjugate(conjugate(lam)), lam)

    def test_estadisticas(self):
        self.assertEqual(z_stat((1, 1, 1)), 6)
        self.assertEqual(z_stat((2, 1)), 2)
        self.assertEqual(z_stat((3,)), 3)
        self.assertEqual(n_stat((2, 1)), 1)
        self.assertEqual(n_stat((1, 1, 1)), 3)
        self.assertEqual(n_stat((4,)), 0)

    def test_n_por_columnas(self):
        for lam in partitions_up_to(7):
            columns = sum(c * (c - 1) // 2 for c in conjugate(lam))
            self.assertEqual(n_stat(lam), columns)

    def test_ganchos(self):
        self.assertEqual(hook_lengths((1, 1, 1)), [1, 2, 3])
        self.assertEqual(hook_lengths((3,)), [1, 2, 3])
        self.assertEqual(hook_lengths((2, 1)), [1, 1, 3])
        for lam in enumerate_partitions(6):
            self.assertEqual(len(hook_lengths(lam)), 6)


class QStatisticsTests(SimpleTestCase):

    def test_z_t(self):
        self.assertEqual(z_t((1,), 0), 1)
        self.assertEqual(z_t((1, 1), Fraction(1, 2)), 8)
        for q in (2, 3, 4):
            for n in range(1, 5):
                self.assertEqual(z_t((n,), Fraction(1, q)) * Fraction(1, q) ** n, Fraction(n, q ** n - 1))

    def test_z_t_polo(self):
        with self.assertRaises(ZeroDivisionError):
            z_t((2,), 1)

    def test_b_t(self):
        t = Fraction(1, 3)
        self.assertEqual(b_t((1,), t), 1 - t)
        self.assertEqual(b_t((1, 1), t), (1 - t) ** 2 * (1 + t))
        self.assertEqual(b_t((2, 1), 0), 1)

    def test_a_q(self):
        self.assertEqual(a_q((1,), 5), 4)
        self.assertEqual(a_q((1, 1), 2), 6)
        self.assertEqual(a_q((2,), 2), 2)
        for q in (2, 3):
            for lam in partitions_up_to(5):
                if lam:
                    self.assertGreater(a_q(lam, q), 0)

    def test_binomial_gaussiano(self):
        t = Fraction(2, 7)
        self.assertEqual(gauss_binomial(2, 1, t), 1 + t)
        self.assertEqual(gauss_binomial(5, 0, t), 1)
        self.assertEqual(gauss_binomial(4, 2, t), 1 + t + 2 * t ** 2 + t ** 3 + t ** 4)
        self.assertEqual(gauss_binomial(3, 4, t), 0)
        self.assertEqual(gauss_binomial(3, -1, t), 0)
        for m in range(7):
            for r in range(m + 1):
                self.assertEqual(gauss_binomial(m, r, 3), gauss_binomial(m, m - r, 3))

    def test_franja_vertical(self):
        self.assertTrue(is_vertical_strip(Partition((2, 1)), Partition((1,)), 2))
        self.assertFalse(is_vertical_strip(Partition((2,)), Partition(), 2))
        self.assertTrue(is_vertical_strip(Partition((1, 1)), Partition()))


class EnumerationTests(SimpleTestCase):

    def test_particiones(self):
        self.assertEqual(enumerate_partitions(0), (Partition(),))
        self.assertEqual(enumerate_partitions(3), (Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))))
        self.assertEqual(len(enumerate_partitions(5)), 7)

    def test_coloreadas(self):
        colored = enumerate_colored(2, [('a', 1), ('b', 2)])
        expected = [
            ColoredPartition({'a': (2,)}, degrees={'a': 1}),
            ColoredPartition({'a': (1, 1)}, degrees={'a': 1}),
            ColoredPartition({'b': (1,)}, degrees={'b': 2}),
        ]
        self.assertEqual(colored, expected)
        self.assertEqual(enumerate_colored(0, [('a', 1)]), [ColoredPartition()])
        for label in colored:
            self.assertEqual(label.weight, 2)

    def test_coloreada_sin_vacios(self):
        label = ColoredPartition({'a': (), 'b': (1,)}, degrees={'a': 1, 'b': 3})
        self.assertEqual(label.support, ('b',))
        self.assertEqual(label.weight, 3)
        self.assertEqual(label['a'], Partition())

    def test_merge(self):
        degrees = {'a': 1, 'b': 2}
        left = ColoredPartition({'a': (1,)}, degrees=degrees)
        right = ColoredPartition({'a': (2,), 'b': (1,)}, degrees=degrees)
        self.assertEqual(left.merge(right), ColoredPartition({'a': (2, 1), 'b': (1,)}, degrees=degrees))
