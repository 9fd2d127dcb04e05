"""
Aritmética exacta en Q(ζ_m).

Cada elemento guarda sus coordenadas racionales en la base de potencias
1, ζ, …, ζ^{φ(m)−1}, reducidas módulo el polinomial ciclotómico Φ_m. Un
`CyclotomicField(m)` es el contexto de reducción: se construye una vez por
conductor y después es de solo lectura.

Uso:
  K = cyclotomic_field(12)
  z = K.root(3, 1) + K.root(3, 2)     # -> -1
  str(K.root(12, 1))                  # -> '1*z12'
"""
import logging
import math
from fractions import Fraction
from threading import RLock

import sympy
from cachetools import LRUCache, cached
from django.conf import settings

from glchars.exceptions import ConductorError, ResourceBoundError

logger = logging.getLogger(__name__)

_X = sympy.Symbol('x')


@cached(cache=LRUCache(maxsize=512), lock=RLock())
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Φ_m como coeficientes enteros de menor a mayor grado, por división exacta recursiva."""
    if m < 1:
        raise ValueError(f'El conductor debe ser >= 1 (recibido {m})')
    quotient = sympy.Poly(_X ** m - 1, _X, domain='ZZ')
    for d in sympy.divisors(m)[:-1]:
        divisor = sympy.Poly(list(reversed(cyclotomic_polynomial(d))), _X, domain='ZZ')
        quotient = quotient.exquo(divisor)
    return tuple(int(c) for c in reversed(quotient.all_coeffs()))


def _to_sympy(coords) -> sympy.Poly:
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(coords)]
    return sympy.Poly(coeffs, _X, domain='QQ')


def _from_sympy(poly: sympy.Poly, degree: int) -> list[Fraction]:
    coords = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return coords + [Fraction(0)] * (degree - len(coords))


# ─── Contexto de conductor ────────────────────────────────────────────────────

class CyclotomicField:
    """Contexto de reducción para un conductor fijo m; también hace de cuerpo de coeficientes."""

    def __init__(self, m: int):
        modulus = cyclotomic_polynomial(m)
        degree = len(modulus) - 1
        bound = settings.GLCHARS_MAX_CONDUCTOR_DEGREE
        if degree > bound:
            raise ResourceBoundError(f'φ({m})', degree, bound)
        self.m       = m
        self.modulus = modulus
        self.degree  = degree
        self.key     = ('cyclo', m)
        # _powers[e] = coordenadas enteras de ζ^e, 0 <= e < m
        self._powers = self._power_table()
        self.zero = Cyclo(self, (Fraction(0),) * degree)
        self.one  = self.rational(1)
        logger.debug('Contexto ciclotómico m=%s (grado %s) construido', m, degree)

    def _power_table(self) -> list[tuple[int, ...]]:
        table, current = [], [1] + [0] * (self.degree - 1)
        for _ in range(self.m):
            table.append(tuple(current))
            top = current[-1]
            current = [0] + current[:-1]
            if top:
                current = [c - top * a for c, a in zip(current, self.modulus)]
        return table

    def __repr__(self):
        return f'CyclotomicField({self.m})'

    # ── constructores ──

    def rational(self, value) -> 'Cyclo':
        coords = [Fraction(0)] * self.degree
        coords[0] = Fraction(value)
        return Cyclo(self, tuple(coords))

    def power(self, e: int) -> 'Cyclo':
        """ζ_m^e"""
        return Cyclo(self, tuple(Fraction(c) for c in self._powers[e % self.m]))

    def root(self, k: int, a: int) -> 'Cyclo':
        """ζ_k^a = ζ_m^{a·m/k}; exige k | m."""
        if k < 1 or self.m % k:
            raise ConductorError(f'ζ_{k} no vive en Q(ζ_{self.m})')
        return self.power(a * (self.m // k))

    def from_coords(self, coords) -> 'Cyclo':
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            return self.reduce(coords)
        return Cyclo(self, tuple(coords + [Fraction(0)] * (self.degree - len(coords))))

    def reduce(self, coeffs: list) -> 'Cyclo':
        """Reduce un polinomio arbitrario en ζ módulo Φ_m (Φ_m es mónico)."""
        coeffs = list(coeffs)
        degree = self.degree
        for i in range(len(coeffs) - 1, degree - 1, -1):
            top = coeffs[i]
            if top:
                base = i - degree
                for j in range(degree):
                    coeffs[base + j] -= top * self.modulus[j]
        coeffs = coeffs[:degree] + [0] * (degree - len(coeffs))
        return Cyclo(self, tuple(Fraction(c) for c in coeffs))

    # ── interfaz de cuerpo de coeficientes (symfunc) ──

    def convert(self, value) -> 'Cyclo':
        if isinstance(value, Cyclo):
            self._check(value)
            return value
        return self.rational(value)

    def is_zero(self, value: 'Cyclo') -> bool:
        return value.is_zero()

    def _check(self, value: 'Cyclo'):
        if value.field.m != self.m:
            raise ConductorError(f'Conductores distintos: {value.field.m} y {self.m}')


@cached(cache=LRUCache(maxsize=64), lock=RLock())
def cyclotomic_field(m: int) -> CyclotomicField:
    return CyclotomicField(m)


def root_of_unity(m: int, k: int, a: int) -> 'Cyclo':
    return cyclotomic_field(m).root(k, a)


# ─── Elementos ────────────────────────────────────────────────────────────────

class Cyclo:
    __slots__ = ('field', 'coords')

    def __init__(self, field: CyclotomicField, coords: tuple):
        self.field  = field
        self.coords = coords

    @property
    def m(self) -> int:
        return self.field.m

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            self.field._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclo(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclo(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor) -> 'Cyclo':
        factor = Fraction(factor)
        if not factor:
            return self.field.zero
        return Cyclo(self.field, tuple(a * factor for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_rational():
            return other.scale(self.coords[0])
        if other.is_rational():
            return self.scale(other.coords[0])
        product = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        product[i + j] += a * b
        return self.field.reduce(product)

    __rmul__ = __mul__

    def inv(self) -> 'Cyclo':
        """Inverso por Euclides extendido contra Φ_m sobre Q."""
        if self.is_zero():
            raise ZeroDivisionError('Inverso de 0 en un cuerpo ciclotómico')
        if self.is_rational():
            return self.field.rational(1 / self.coords[0])
        modulus = sympy.Poly(list(reversed(self.field.modulus)), _X, domain='QQ')
        inverse = sympy.invert(_to_sympy(self.coords), modulus)
        return Cyclo(self.field, tuple(_from_sympy(inverse, self.field.degree)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError('División entre 0')
            return self.scale(1 / Fraction(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** (-exponent)
        result, base = self.field.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ── automorfismos ──

    def galois_conjugate(self, a: int) -> 'Cyclo':
        """σ_a: ζ_m -> ζ_m^a (a coprimo con m)."""
        m = self.field.m
        if math.gcd(a, m) != 1:
            raise ConductorError(f'{a} no es coprimo con {m}')
        result = [Fraction(0)] * self.field.degree
        for i, c in enumerate(self.coords):
            if c:
                for j, p in enumerate(self.field._powers[(i * a) % m]):
                    if p:
                        result[j] += c * p
        return Cyclo(self.field, tuple(result))

    def conjugate(self) -> 'Cyclo':
        return self.galois_conjugate(-1)

    def trace(self) -> Fraction:
        m = self.field.m
        total = self.field.zero
        for a in range(1, m + 1):
            if math.gcd(a, m) == 1:
                total = total + self.galois_conjugate(a)
        return total.rational_value()

    # ── consultas ──

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_integral(self) -> bool:
        """Entero algebraico: Z[ζ_m] es el anillo de enteros, basta mirar denominadores."""
        return all(c.denominator == 1 for c in self.coords)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f'{self} no es racional')
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.field.m == other.field.m and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.m, self.coords))

    def to_string(self) -> str:
        if self.is_rational():
            return str(self.coords[0])
        m, terms = self.field.m, []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f'{c}*z{m}')
            else:
                terms.append(f'{c}*z{m}^{i}')
        return ' + '.join(terms)

    __str__ = to_string

    def __repr__(self):
        return f'Cyclo({self.to_string()!r}, m={self.field.m})'
