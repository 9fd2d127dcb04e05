from fractions import Fraction
from itertools import combinations

from django.test import SimpleTestCase, tag

from combinatorics.partitions import Partition, b_t, enumerate_partitions, gauss_binomial, partitions_up_to, z_t
from glchars.exceptions import LabelError

from .coefficients import QQ, SYMBOLIC
from .green import evaluate, green_X, green_row, to_string
from .powersum import MultiColorPoly, PowerSumPoly
from .schur import e_in_p, h_in_p, littlewood_eval, principal_specialization, schur_in_p, symgroup_char
from .vertex import (
    HALL_LITTLEWOOD, hl_P, hl_Q, inner_single, vertex_E_apply, vertex_Estar_apply, vertex_Q_apply,
    vertex_Q_sequence, vertex_S_apply,
)


def p(*parts, coeff=1, field=QQ):
    return PowerSumPoly.monomial(field, Partition(parts), coeff)


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


class PowerSumPolyTests(SimpleTestCase):

    def test_producto(self):
        self.assertEqual(p(1) * p(1), p(1, 1))
        self.assertTrue(((p(1) + p(2)) * 0).is_zero())
        product = (p(2, 1) + p(3)) * (p(1) - p(2, 2))
        self.assertEqual(product.degrees(), {4, 7})

    def test_cuerpos_distintos(self):
        with self.assertRaises(ValueError):
            p(1) + p(1, field=SYMBOLIC)

    def test_multicolor(self):
        poly = MultiColorPoly.from_color(p(1) + p(2), 'f', 2)
        self.assertEqual({key.weight for key, _ in poly.items()}, {2, 4})
        square = poly * poly
        self.assertEqual({key.weight for key, _ in square.items()}, {4, 6, 8})


class FunctionFieldTests(SimpleTestCase):

    def test_evaluacion(self):
        t = SYMBOLIC.t
        self.assertEqual(SYMBOLIC.evaluate(SYMBOLIC.one / (1 - t), Fraction(1, 2)), 2)
        self.assertEqual(SYMBOLIC.evaluate((t ** 2 + 1) / (3 * t), 2), Fraction(5, 6))
        self.assertEqual(SYMBOLIC.evaluate(SYMBOLIC.convert(Fraction(7, 3)), 5), Fraction(7, 3))

    def test_coincide_con_la_expansion_numerica(self):
        point = Fraction(1, 2)
        for lam in partitions_up_to(3):
            symbolic = {mu: SYMBOLIC.evaluate(c, point) for mu, c in hl_Q(lam, SYMBOLIC.t).items()}
            numeric = dict(hl_Q(lam, point).items())
            self.assertEqual({mu: c for mu, c in symbolic.items() if c}, numeric)

    def test_polo(self):
        with self.assertRaises(ZeroDivisionError):
            SYMBOLIC.evaluate(SYMBOLIC.one / (1 - SYMBOLIC.t), 1)


class VertexOperatorTests(SimpleTestCase):
    t = Fraction(1, 2)

    def test_primera_componente(self):
        one = PowerSumPoly.one(QQ)
        for q in (2, 3, 5):
            self.assertEqual(vertex_Q_apply(1, one, Fraction(1, q)), p(1, coeff=q - 1))
        self.assertTrue(vertex_Q_apply(-1, one, self.t).is_zero())
        self.assertEqual(hl_Q((), self.t), one)

    def test_una_fila(self):
        q = 3
        for n in range(1, 6):
            expected = PowerSumPoly(QQ, {
                rho: Fraction(q) ** n / z_t(rho, Fraction(1, q)) for rho in enumerate_partitions(n)
            })
            self.assertEqual(hl_Q((n,), Fraction(1, q)), expected)

    def test_dos_columnas(self):
        for q in (2, 3):
            coeff = Fraction((q - 1) ** 2 * (q + 1), 2 * q)
            self.assertEqual(hl_Q((1, 1), Fraction(1, q)), p(1, 1, coeff=coeff) - p(2, coeff=coeff))

    def test_norma_simbolica(self):
        t = SYMBOLIC.t
        for lam in partitions_up_to(4):
            Q = hl_Q(lam, t, SYMBOLIC)
            self.assertEqual(inner_single(Q, Q, HALL_LITTLEWOOD, t), b_t(lam, t) / t ** lam.weight)

    @tag('slow')
    def test_norma_simbolica_grado_6(self):
        t = SYMBOLIC.t
        for lam in enumerate_partitions(6):
            Q = hl_Q(lam, t, SYMBOLIC)
            self.assertEqual(inner_single(Q, Q, HALL_LITTLEWOOD, t), b_t(lam, t) / t ** lam.weight)

    def test_ortogonalidad(self):
        t = Fraction(1, 3)
        for n in range(1, 5):
            for lam in enumerate_partitions(n):
                for mu in enumerate_partitions(n):
                    value = inner_single(hl_P(lam, t), hl_Q(mu, t), HALL_LITTLEWOOD, t)
                    self.assertEqual(value, 1 if lam == mu else 0)

    def _check_commutation(self, max_degree):
        t = self.t
        for m in range(-2, 3):
            for lam in partitions_up_to(max_degree):
                v = p(*lam)
                left = vertex_Q_apply(m, vertex_Q_apply(m + 1, v, t), t)
                right = vertex_Q_apply(m + 1, vertex_Q_apply(m, v, t), t)
                self.assertEqual(left, right.scale(t), f'm={m}, p_{lam.label()}')

    def test_conmutacion(self):
        self._check_commutation(4)

    @tag('slow')
    def test_conmutacion_grado_8(self):
        self._check_commutation(8)

    def test_sucesion(self):
        t = Fraction(1, 2)
        self.assertEqual(vertex_Q_sequence((2, 1), t), hl_Q((2, 1), t))
        # Q_1 Q_2 = t Q_2 Q_1 sobre el vacío
        self.assertEqual(vertex_Q_sequence((1, 2), t), hl_Q((2, 1), t).scale(t))

    def test_schur_por_vertices(self):
        for lam in partitions_up_to(5):
            v = PowerSumPoly.one(QQ)
            for part in reversed(lam):
                v = vertex_S_apply(part, v)
            self.assertEqual(v, schur_in_p(lam))


class HalfVertexOperatorTests(SimpleTestCase):
    t = Fraction(1, 3)

    def test_identidad(self):
        v = p(2, 1) + p(1, coeff=5)
        self.assertEqual(vertex_Estar_apply(0, v, self.t), v)

    def test_rectangulos(self):
        t = self.t
        for n in (1, 2, 3):
            for m in (1, 2, 3):
                if n * m > 6:
                    continue
                rect = Partition((n,) * m)
                for r in range(m + 1):
                    target = Partition((n,) * (m - r) + (n - 1,) * r)
                    expected = hl_Q(target, t).scale(gauss_binomial(m, r, t))
                    self.assertEqual(vertex_Estar_apply(r, hl_Q(rect, t), t), expected)
                self.assertTrue(vertex_Estar_apply(m + 1, hl_Q(rect, t), t).is_zero())

    def test_adjunto(self):
        t = self.t
        for r in range(1, 4):
            for lam in partitions_up_to(3):
                for mu in enumerate_partitions(lam.weight + r):
                    u, v = p(*lam), p(*mu)
                    self.assertEqual(
                        inner_single(vertex_E_apply(r, u), v, HALL_LITTLEWOOD, t),
                        inner_single(u, vertex_Estar_apply(r, v, t), HALL_LITTLEWOOD, t),
                    )

    def test_conmutacion_con_Q(self):
        # E*(w) Q(z) = (1 + wz) Q(z) E*(w)
        t = self.t
        for n in range(0, 3):
            for r in range(1, 3):
                for lam in partitions_up_to(3):
                    v = p(*lam)
                    left = vertex_Estar_apply(r, vertex_Q_apply(n, v, t), t)
                    right = (vertex_Q_apply(n, vertex_Estar_apply(r, v, t), t)
                             + vertex_Q_apply(n - 1, vertex_Estar_apply(r - 1, v, t), t))
                    self.assertEqual(left, right)

    def _reduccion(self, t, field, max_weight):
        # E*_r Q_{a1}…Q_{al}.1 = Σ_{|S|=r} Q_{a − e_S}.1
        for weight in range(max_weight + 1):
            for a in compositions(weight):
                v = vertex_Q_sequence(a, t)
                for r in range(3):
                    expected = PowerSumPoly.zero(field)
                    for subset in combinations(range(len(a)), r):
                        lowered = tuple(part - (i in subset) for i, part in enumerate(a))
                        expected = expected + vertex_Q_sequence(lowered, t)
                    self.assertEqual(vertex_Estar_apply(r, v, t), expected, (a, r))

    def test_reduccion_por_subconjuntos(self):
        self._reduccion(self.t, QQ, 4)

    def test_reduccion_simbolica(self):
        self._reduccion(SYMBOLIC.t, SYMBOLIC, 3)

    @tag('slow')
    def test_reduccion_simbolica_grado_4(self):
        self._reduccion(SYMBOLIC.t, SYMBOLIC, 4)


class SchurTests(SimpleTestCase):

    def test_expansiones(self):
        self.assertEqual(schur_in_p((3,)), h_in_p(3))
        self.assertEqual(schur_in_p((2, 1)), p(1, 1, 1, coeff=Fraction(1, 3)) - p(3, coeff=Fraction(1, 3)))
        self.assertEqual(e_in_p(1), p(1))
        self.assertEqual(e_in_p(2), p(1, 1, coeff=Fraction(1, 2)) - p(2, coeff=Fraction(1, 2)))
        self.assertEqual(e_in_p(0), PowerSumPoly.one(QQ))

    def test_ortonormales(self):
        for n in range(1, 6):
            for lam in enumerate_partitions(n):
                for mu in enumerate_partitions(n):
                    self.assertEqual(inner_single(schur_in_p(lam), schur_in_p(mu)), 1 if lam == mu else 0)

    def test_caracteres(self):
        self.assertEqual(symgroup_char((3,), (2, 1)), 1)
        self.assertEqual(symgroup_char((1, 1), (2,)), -1)
        self.assertEqual(symgroup_char((2, 1), (1, 1, 1)), 2)
        self.assertEqual(symgroup_char((2, 1), (3,)), -1)
        with self.assertRaises(LabelError):
            symgroup_char((2,), (1,))

    def test_littlewood(self):
        t = Fraction(1, 4)
        self.assertEqual(littlewood_eval((1,), t), t / (1 - t))
        for lam in enumerate_partitions(5):
            self.assertEqual(littlewood_eval(lam, t), principal_specialization(schur_in_p(lam), t))
        with self.assertRaises(ZeroDivisionError):
            littlewood_eval((2,), 1)


class GreenPolynomialTests(SimpleTestCase):

    def test_ejemplos(self):
        self.assertEqual(green_X((1, 1), (1, 1)), (1, 1))
        self.assertEqual(green_X((1, 1), (2,)), (-1, 1))
        self.assertEqual(to_string(green_X((1, 1), (2,))), '-1 + t')
        with self.assertRaises(LabelError):
            green_X((2,), (1,))

    def test_una_fila(self):
        for n in range(1, 7):
            for rho in enumerate_partitions(n):
                self.assertEqual(green_X((n,), rho), (1,))

    def test_caracteres_en_cero(self):
        for n in range(1, 5):
            for lam in enumerate_partitions(n):
                row = green_row(lam)
                for rho in enumerate_partitions(n):
                    self.assertEqual(evaluate(row[rho], 0), symgroup_char(lam, rho))

    @tag('slow')
    def test_caracteres_en_cero_grado_6(self):
        for n in (5, 6):
            for lam in enumerate_partitions(n):
                row = green_row(lam)
                for rho in enumerate_partitions(n):
                    self.assertEqual(evaluate(row[rho], 0), symgroup_char(lam, rho))

    def test_evaluacion_numerica(self):
        # X^λ_ρ(1/q) coincide con la expansión numérica de Q_λ.1
        q = 3
        t = Fraction(1, q)
        for lam in enumerate_partitions(4):
            expansion = hl_Q(lam, t)
            for rho, coeffs in green_row(lam).items():
                self.assertEqual(evaluate(coeffs, t), expansion.coefficient(rho) * t ** 4 * z_t(rho, t))
