"""
Cuerpos de coeficientes intercambiables para los polinomios en sumas de potencias.

Cada cuerpo expone `zero`, `one`, `convert(x)`, `is_zero(x)` y una `key`
hashable para las cachés. `cyclotomic.cyclo.CyclotomicField` cumple la misma
interfaz.
"""
from fractions import Fraction

import sympy
from sympy.polys.fields import FracElement, field


class RationalField:
    key  = ('QQ',)
    zero = Fraction(0)
    one  = Fraction(1)

    def convert(self, value) -> Fraction:
        return Fraction(value)

    def is_zero(self, value) -> bool:
        return value == 0

    def __repr__(self):
        return 'RationalField()'


class FunctionField:
    """Q(t) con los elementos reducidos de sympy (`field("t", QQ)`)."""

    def __init__(self, symbol: str = 't'):
        self.K, self.t = field(symbol, sympy.QQ)
        self.symbol = sympy.Symbol(symbol)
        self.zero   = self.K.zero
        self.one    = self.K.one
        self.key    = ('QQ(t)', symbol)

    def __repr__(self):
        return f'FunctionField({self.symbol})'

    def convert(self, value) -> FracElement:
        if isinstance(value, Fraction):
            return self.K(value.numerator) / value.denominator
        return self.K(value)

    def is_zero(self, value) -> bool:
        return value == self.zero

    def polynomial_coefficients(self, value) -> list[Fraction]:
        """Coeficientes (de menor a mayor grado) si value es un polinomio en t."""
        numer, denom = sympy.fraction(sympy.cancel(value.as_expr()))
        denom_poly = sympy.Poly(denom, self.symbol)
        if denom_poly.degree() > 0:
            raise ValueError(f'{value} no es un polinomio en {self.symbol}')
        scale = denom_poly.LC()
        coeffs = sympy.Poly(numer, self.symbol).all_coeffs()
        return [Fraction(int(c.p), int(c.q)) / Fraction(int(scale.p), int(scale.q)) for c in reversed(coeffs)]

    def integer_coefficients(self, value) -> tuple[int, ...]:
        coeffs = self.polynomial_coefficients(value)
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError(f'{value} tiene coeficientes no enteros')
        return tuple(int(c) for c in coeffs)

    @staticmethod
    def _at(poly, point: Fraction) -> Fraction:
        total = Fraction(0)
        for (power,), coeff in poly.terms():
            total += Fraction(int(coeff.numerator), int(coeff.denominator)) * point ** power
        return total

    def evaluate(self, value, point) -> Fraction:
        """value(point) evaluando numerador y denominador en el racional point."""
        point = Fraction(point)
        denom = self._at(value.denom, point)
        if denom == 0:
            raise ZeroDivisionError(f'{value} tiene un polo en t = {point}')
        return self._at(value.numer, point) / denom


QQ       = RationalField()
SYMBOLIC = FunctionField('t')


def field_for(t):
    """Cuerpo natural de un punto de evaluación t."""
    if isinstance(t, (int, Fraction)):
        return QQ
    if isinstance(t, FracElement) and t.field == SYMBOLIC.K:
        return SYMBOLIC
    raise TypeError(f'No sé en qué cuerpo vive {t!r}; pasa el cuerpo explícitamente')
