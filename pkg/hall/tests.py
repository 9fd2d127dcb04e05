from fractions import Fraction

from django.test import SimpleTestCase, tag

from combinatorics.partitions import ColoredPartition, Partition, enumerate_partitions, is_vertical_strip, partitions_up_to
from orbits.orbits import value_orbit
from symfunc.green import evaluate
from symfunc.vertex import hl_Q, vertex_Estar_apply

from .constants import HallConstantKey, colored_hall_product, hall_G, hall_polynomial, pieri_G, strip_coeff


def _strips(lam: Partition, r: int):
    return [mu for mu in enumerate_partitions(lam.weight - r) if is_vertical_strip(lam, mu, r)]


class PieriTests(SimpleTestCase):

    def test_ejemplos(self):
        for q in (2, 3, 4):
            self.assertEqual(pieri_G((1, 1), (1,), 1, q), q + 1)
            self.assertEqual(pieri_G((2,), (1,), 1, q), 1)
        for lam in partitions_up_to(4):
            self.assertEqual(pieri_G(lam, lam, 0, 3), 1)
        self.assertEqual(pieri_G((2,), (), 2, 2), 0)

    def test_coeficiente_de_franja(self):
        t = Fraction(1, 3)
        self.assertEqual(strip_coeff((2, 2), (2, 1), 1, t), 1 + t)
        self.assertEqual(strip_coeff((2, 2, 2), (2, 1, 1), 2, t), 1 + t + t ** 2)
        self.assertEqual(strip_coeff((3, 1), (3, 1), 0, t), 1)
        self.assertEqual(strip_coeff((2,), (), 2, t), 0)

    def test_accion_de_E_estrella(self):
        # E*_r Q_ν.1 = Σ_μ strip_coeff(ν, μ, r) Q_μ.1
        t = Fraction(1, 2)
        for nu in partitions_up_to(5):
            for r in range(1, nu.weight + 1):
                expected = hl_Q((), t).scale(0)
                for mu in _strips(nu, r):
                    expected = expected + hl_Q(mu, t).scale(strip_coeff(nu, mu, r, t))
                self.assertEqual(vertex_Estar_apply(r, hl_Q(nu, t), t), expected, f'ν={nu}, r={r}')


class HallConstantTests(SimpleTestCase):

    def _check_pieri(self, max_weight):
        for q in (2, 3):
            for lam in partitions_up_to(max_weight):
                for r in range(1, lam.weight + 1):
                    column = Partition((1,) * r)
                    for mu in enumerate_partitions(lam.weight - r):
                        self.assertEqual(hall_G(lam, mu, column, q), pieri_G(lam, mu, r, q), f'{lam} {mu} {r} {q}')

    def test_pieri(self):
        self._check_pieri(4)

    @tag('slow')
    def test_pieri_grado_6(self):
        self._check_pieri(6)

    def test_ejemplos(self):
        for q in (2, 3):
            value = hall_G((2, 1), (1,), (1, 1), q)
            self.assertIsInstance(value, int)
            self.assertGreaterEqual(value, 0)
        self.assertEqual(hall_G((2,), (1,), (1, 1), 2), 0)
        self.assertEqual(HallConstantKey((1, 1), (1,), (1,), 2).value(), 3)

    def test_conmutatividad(self):
        for lam in partitions_up_to(4):
            for k in range(lam.weight + 1):
                for mu in enumerate_partitions(k):
                    for nu in enumerate_partitions(lam.weight - k):
                        self.assertEqual(hall_G(lam, mu, nu, 2), hall_G(lam, nu, mu, 2))

    def _check_associativity(self, n, q):
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                for mu in enumerate_partitions(a):
                    for nu in enumerate_partitions(b):
                        for rho in enumerate_partitions(c):
                            for lam in enumerate_partitions(n):
                                left = sum(
                                    hall_G(sigma, mu, nu, q) * hall_G(lam, sigma, rho, q)
                                    for sigma in enumerate_partitions(a + b)
                                )
                                right = sum(
                                    hall_G(tau, nu, rho, q) * hall_G(lam, mu, tau, q)
                                    for tau in enumerate_partitions(b + c)
                                )
                                self.assertEqual(left, right)

    def test_asociatividad(self):
        for q in (2, 3):
            self._check_associativity(3, q)

    @tag('slow')
    def test_asociatividad_grado_5(self):
        for q in (2, 3):
            self._check_associativity(5, q)

    def test_polinomio_de_hall(self):
        self.assertEqual(hall_polynomial((1, 1), (1,), (1,)), (1, 1))
        for lam in partitions_up_to(4):
            for k in range(1, lam.weight):
                for mu in enumerate_partitions(k):
                    for nu in enumerate_partitions(lam.weight - k):
                        coeffs = hall_polynomial(lam, mu, nu)
                        for q in (2, 3, 4):
                            self.assertEqual(evaluate(coeffs, q), hall_G(lam, mu, nu, q))


class ColoredHallProductTests(SimpleTestCase):

    def test_unidad(self):
        f = value_orbit(2, 1, 0)
        mu = ColoredPartition({f: (1,)})
        self.assertEqual(colored_hall_product(mu, ColoredPartition(), 2), {mu: 1})

    def test_gl1_por_gl1(self):
        f, g = value_orbit(3, 1, 0), value_orbit(3, 1, 1)
        same = colored_hall_product(ColoredPartition({f: (1,)}), ColoredPartition({f: (1,)}), 3)
        self.assertEqual(same, {ColoredPartition({f: (2,)}): 1, ColoredPartition({f: (1, 1)}): 4})
        mixed = colored_hall_product(ColoredPartition({f: (1,)}), ColoredPartition({g: (1,)}), 3)
        self.assertEqual(mixed, {ColoredPartition({f: (1,), g: (1,)}): 1})

    def test_grado_del_color(self):
        h = value_orbit(2, 2, 1)
        result = colored_hall_product(ColoredPartition({h: (1,)}), ColoredPartition({h: (1,)}), 2)
        self.assertEqual(result[ColoredPartition({h: (1, 1)})], 5)     # q_f + 1 con q_f = 4
