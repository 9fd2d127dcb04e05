from fractions import Fraction

from django.test import SimpleTestCase, override_settings, tag

from cyclotomic.cyclo import cyclotomic_field
from glchars.exceptions import FieldRealizationError, LabelError, ResourceBoundError

from .fields import as_poly, min_poly, orbit_of_polynomial, poly_coeffs, realize
from .orbits import (
    CHARACTER, VALUE, Orbit, character_orbit, check_prime_power, count_irreducible, embed, embed_exponent,
    enumerate_orbits, orbits_of_degree, pairing, pairing_at, pairing_symmetric, value_orbit,
)
from .serializers import OrbitSerializer, PolynomialOrbitSerializer


class OrbitEnumerationTests(SimpleTestCase):

    def test_q2(self):
        self.assertEqual(enumerate_orbits(2, 1), [Orbit(VALUE, 2, 1, 0)])
        self.assertEqual(enumerate_orbits(2, 2), [Orbit(VALUE, 2, 1, 0), Orbit(VALUE, 2, 2, 1)])

    def test_q3(self):
        orbits = enumerate_orbits(3, 2)
        self.assertEqual([o.rep for o in orbits if o.degree == 1], [0, 1])
        self.assertEqual(len([o for o in orbits if o.degree == 2]), 3)

    def test_cuenta_de_irreducibles(self):
        for q in (2, 3, 4, 5):
            for d in range(1, 4):
                self.assertEqual(len(orbits_of_degree(q, d)), count_irreducible(q, d))

    def test_particion_del_grupo(self):
        for q in (2, 3, 4):
            for k in range(1, 5):
                total = sum(
                    d * len(orbits_of_degree(q, d))
                    for d in range(1, k + 1) if k % d == 0
                )
                self.assertEqual(total, q ** k - 1)

    def test_representante_no_canonico(self):
        with self.assertRaises(LabelError):
            Orbit(VALUE, 2, 2, 2)
        with self.assertRaises(LabelError):
            value_orbit(2, 2, 0)
        self.assertEqual(value_orbit(2, 2, 2).rep, 1)

    def test_no_potencia_de_primo(self):
        with self.assertRaises(LabelError):
            enumerate_orbits(6, 1)

    @override_settings(GLCHARS_MAX_FIELD_SIZE=100)
    def test_limite(self):
        with self.assertRaises(ResourceBoundError):
            enumerate_orbits(3, 5)


class EmbeddingTests(SimpleTestCase):

    def test_inmersion(self):
        self.assertEqual(embed(value_orbit(2, 1, 0), 3), (0,))
        self.assertEqual(embed(value_orbit(2, 2, 1), 4), (5, 10))
        self.assertEqual(embed(value_orbit(2, 1, 0), 2), (0,))
        with self.assertRaises(LabelError):
            embed(value_orbit(2, 2, 1), 3)

    def test_conserva_cardinal(self):
        for o in enumerate_orbits(3, 2):
            for k in (2, 4):
                self.assertEqual(len(embed(o, k)), o.degree)

    def test_conmuta_con_q(self):
        for q in (2, 3, 4, 5):
            for k in range(1, 5):
                if q ** k > 1000:
                    continue
                big = q ** k - 1
                for d in (d for d in range(1, k + 1) if k % d == 0):
                    small = q ** d - 1
                    for o in orbits_of_degree(q, d):
                        for j in o.coset():
                            self.assertEqual(
                                embed_exponent(q * j % small, q, d, k), q * embed_exponent(j, q, d, k) % big,
                            )
                        image = set(embed(o, k))
                        self.assertEqual({q * x % big for x in image}, image)


class PairingTests(SimpleTestCase):

    def test_identidad(self):
        for phi in enumerate_orbits(3, 2, CHARACTER):
            for k in (2, 4):
                self.assertEqual(pairing(phi, value_orbit(3, 1, 0), k), 1)

    def test_caracter_trivial(self):
        for f in enumerate_orbits(3, 2):
            self.assertEqual(pairing(character_orbit(3, 1, 0), f, 2), 1)

    def test_valores(self):
        self.assertEqual(pairing(character_orbit(2, 2, 1), value_orbit(2, 2, 1), 2), Fraction(-1, 2))
        self.assertEqual(pairing_symmetric(character_orbit(3, 1, 1), value_orbit(3, 1, 1), 1), -1)

    def test_fuera_de_nivel(self):
        self.assertEqual(pairing(character_orbit(2, 2, 1), value_orbit(2, 1, 0), 3), 0)

    def test_simetrico(self):
        for q in (2, 3):
            for k in range(1, 5):
                field = cyclotomic_field(q ** k - 1)
                divisors = [d for d in range(1, k + 1) if k % d == 0]
                for d1 in divisors:
                    for d2 in divisors:
                        for phi in orbits_of_degree(q, d1, CHARACTER):
                            for f in orbits_of_degree(q, d2):
                                self.assertEqual(
                                    pairing(phi, f, k, field), pairing_symmetric(phi, f, k, field),
                                )

    def test_independiente_de_x(self):
        field = cyclotomic_field(80)
        for phi in orbits_of_degree(3, 2, CHARACTER):
            for f in orbits_of_degree(3, 4):
                values = {pairing_at(phi, f, 4, x, field) for x in embed(f, 4)}
                self.assertEqual(len(values), 1)

    def test_segunda_ortogonalidad(self):
        q, k = 3, 2
        level = q ** k - 1
        field = cyclotomic_field(level)
        exponents = [
            xi for d in (1, 2) for phi in orbits_of_degree(q, d, CHARACTER) for xi in embed(phi, k)
        ]
        self.assertEqual(sorted(exponents), list(range(level)))
        for x in range(level):
            for y in range(level):
                total = field.zero
                for xi in exponents:
                    total = total + field.root(level, xi * (x - y))
                self.assertEqual(total, level if x == y else 0)

    @tag('slow')
    @override_settings(GLCHARS_MAX_FIELD_SIZE=10**4)
    def test_segunda_ortogonalidad_exhaustiva(self):
        # Σ_ξ ζ^{ξ(x − y)} solo depende de g = mcd(x − y, q^k − 1)
        for q in range(2, 1002):
            try:
                check_prime_power(q)
            except LabelError:
                continue
            k = 1
            while q ** k - 1 <= 1000:
                level = q ** k - 1
                field = cyclotomic_field(level)
                exponents = [
                    xi for d in range(1, k + 1) if k % d == 0
                    for phi in orbits_of_degree(q, d, CHARACTER) for xi in embed(phi, k)
                ]
                self.assertEqual(sorted(exponents), list(range(level)), (q, k))
                for g in (g for g in range(1, level + 1) if level % g == 0):
                    counts = [0] * level
                    for xi in exponents:
                        counts[xi * g % level] += 1
                    self.assertEqual(field.reduce(counts), level if g == level else 0, (q, k, g))
                k += 1


class FieldRealizationTests(SimpleTestCase):

    def test_polinomio_minimo(self):
        self.assertEqual(poly_coeffs(min_poly(value_orbit(2, 1, 0))), [1, 1])   # t − 1 = t + 1 en F_2
        self.assertEqual(poly_coeffs(min_poly(value_orbit(3, 1, 0))), [2, 1])   # t − 1
        self.assertEqual(poly_coeffs(min_poly(value_orbit(2, 2, 1))), [1, 1, 1])
        self.assertEqual(poly_coeffs(min_poly(value_orbit(3, 1, 1))), [1, 1])   # t + 1

    def test_ida_y_vuelta(self):
        for q in (2, 3, 4):
            for o in enumerate_orbits(q, 3):
                self.assertEqual(orbit_of_polynomial(min_poly(o)), o)

    def test_entradas_invalidas(self):
        with self.assertRaises(FieldRealizationError):
            orbit_of_polynomial([0, 1], q=3)
        with self.assertRaises(FieldRealizationError):
            orbit_of_polynomial([1, 0, 1], q=2)      # (t + 1)^2
        with self.assertRaises(LabelError):
            orbit_of_polynomial([1, 2], q=2)

    def test_frobenius(self):
        field = realize(2, 2)
        self.assertEqual(field.element_order(field.generator), 3)
        for e in range(field.order):
            x = field.power(e)
            self.assertEqual(pow(x, 4, field.modulus), x)

    def test_compatibilidad_por_norma(self):
        for q, d in ((2, 4), (3, 2), (2, 6)):
            field = realize(q, d)
            for k in (k for k in range(1, d) if d % k == 0):
                sub = realize(q, k)
                root = field.power(field.order // sub.order)
                self.assertEqual(poly_coeffs(field.evaluate(sub.modulus, root)), [0])

    def test_logaritmo(self):
        for q, d in ((2, 3), (3, 2), (4, 2), (5, 1)):
            field = realize(q, d)
            for e in range(field.order):
                self.assertEqual(field.log(field.power(e)), e)
        field = realize(3, 2)
        self.assertEqual(field.log(field.mul(field.power(5), field.power(6))), 3)
        with self.assertRaises(FieldRealizationError):
            field.log(field.zero)

    def test_logaritmo_limite(self):
        field = realize(2, 4)
        with override_settings(GLCHARS_MAX_FIELD_SIZE=8):
            with self.assertRaises(ResourceBoundError):
                field.log(field.generator)


class OrbitSerializerTests(SimpleTestCase):

    def test_representacion(self):
        self.assertEqual(
            OrbitSerializer(value_orbit(2, 2, 1)).data, {'kind': 'value', 'q': 2, 'd': 2, 'rep': 1},
        )

    def test_canonizacion(self):
        serializer = OrbitSerializer(data={'kind': 'character', 'q': 2, 'd': 2, 'rep': 2})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), character_orbit(2, 2, 1))

    def test_periodo_incorrecto(self):
        serializer = OrbitSerializer(data={'kind': 'value', 'q': 2, 'd': 2, 'rep': 0})
        self.assertFalse(serializer.is_valid())

    def test_polinomio(self):
        serializer = PolynomialOrbitSerializer(data={'q': 2, 'poly': [1, 1, 1]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), value_orbit(2, 2, 1))
        self.assertEqual(as_poly([1, 1, 1], 2).degree, 2)
