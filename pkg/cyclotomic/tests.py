import math
import random
from fractions import Fraction

from django.test import SimpleTestCase, override_settings

from glchars.exceptions import ConductorError, ResourceBoundError

from .cyclo import CyclotomicField, cyclotomic_field, cyclotomic_polynomial, root_of_unity
from .serializers import CycloSerializer


def _random_element(field, rng):
    return field.from_coords(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(field.degree))


class CyclotomicPolynomialTests(SimpleTestCase):

    def test_pequenos(self):
        self.assertEqual(cyclotomic_polynomial(1), (-1, 1))
        self.assertEqual(cyclotomic_polynomial(3), (1, 1, 1))
        self.assertEqual(cyclotomic_polynomial(12), (1, 0, -1, 0, 1))

    def test_grado_totiente(self):
        for m in range(1, 40):
            phi = sum(1 for a in range(1, m + 1) if math.gcd(a, m) == 1)
            self.assertEqual(len(cyclotomic_polynomial(m)) - 1, phi)

    def test_reconstruccion(self):
        # Π_{a coprimo} (x − ζ^a) evaluado en ζ^b debe anularse en cada raíz primitiva
        for m in (5, 8, 12, 15, 21, 30):
            field = cyclotomic_field(m)
            for a in range(1, m):
                if math.gcd(a, m) != 1:
                    continue
                root = field.power(a)
                value = field.zero
                for i, c in enumerate(field.modulus):
                    value = value + root ** i * c
                self.assertTrue(value.is_zero())


class CycloArithmeticTests(SimpleTestCase):

    def test_raices(self):
        self.assertEqual(root_of_unity(7, 7, 0), 1)
        K = cyclotomic_field(3)
        self.assertEqual(K.root(3, 1) + K.root(3, 2), -1)
        self.assertEqual(root_of_unity(6, 2, 1), -1)
        self.assertEqual(K.root(3, 1) * K.root(3, 2), 1)

    def test_raiz_fuera_de_conductor(self):
        with self.assertRaises(ConductorError):
            root_of_unity(6, 4, 1)

    def test_conjugado_real(self):
        K = cyclotomic_field(5)
        x = K.root(5, 1) + K.root(5, 4)
        self.assertEqual(x.conjugate(), x)
        self.assertNotEqual(K.root(5, 1).conjugate(), K.root(5, 1))

    def test_inverso(self):
        K = cyclotomic_field(12)
        self.assertEqual(K.rational(2).inv(), Fraction(1, 2))
        rng = random.Random(7)
        for _ in range(10):
            x = _random_element(K, rng)
            if x.is_zero():
                continue
            self.assertEqual(x * x.inv(), 1)
        with self.assertRaises(ZeroDivisionError):
            K.zero.inv()

    def test_axiomas(self):
        rng = random.Random(11)
        K = cyclotomic_field(15)
        for _ in range(10):
            a, b, c = (_random_element(K, rng) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a - a, 0)

    def test_norma_positiva(self):
        rng = random.Random(3)
        for m in (7, 20, 105):
            K = cyclotomic_field(m)
            for _ in range(3):
                z = _random_element(K, rng)
                self.assertGreaterEqual((z * z.conjugate()).trace(), 0)

    def test_conductores_distintos(self):
        with self.assertRaises(ConductorError):
            cyclotomic_field(3).one + cyclotomic_field(5).one

    def test_texto(self):
        K = cyclotomic_field(3)
        self.assertEqual(K.rational(Fraction(1, 2)).to_string(), '1/2')
        self.assertEqual(K.root(3, 1).to_string(), '1*z3')
        self.assertEqual(K.root(3, 2).to_string(), '-1 + -1*z3')
        self.assertTrue(K.root(3, 2).is_integral())

    @override_settings(GLCHARS_MAX_CONDUCTOR_DEGREE=4)
    def test_limite_conductor(self):
        with self.assertRaises(ResourceBoundError):
            CyclotomicField(7)


class CycloSerializerTests(SimpleTestCase):

    def test_representacion(self):
        K = cyclotomic_field(3)
        data = CycloSerializer(K.root(3, 1) / 2).data
        self.assertEqual(data, {'m': 3, 'coeffs': [[0, 1], [1, 2]]})

    def test_validacion(self):
        serializer = CycloSerializer(data={'m': 4, 'coeffs': [[1, 1], [0, 1]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), 1)
        bad = CycloSerializer(data={'m': 4, 'coeffs': [[1, 1]]})
        self.assertFalse(bad.is_valid())
