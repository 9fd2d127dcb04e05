"""
Realización concreta de F_{q^d} = F_q[y]/(g) con galois.

Solo se necesita para pasar de órbitas a polinomios mínimos y al revés
(etiquetas de clase legibles y el oráculo). El polinomio g de cada grado es el
menor, en orden lexicográfico, entre los irreducibles cuya raíz y es primitiva
y compatible por norma con los grados divisores: y^{(q^d−1)/(q^k−1)} es raíz de
g_k para todo k | d. Así las etiquetas concretas coinciden con la inmersión de
exponentes entre grados.

Uso:
  min_poly(value_orbit(2, 2, 1))            # Poly(x^2 + x + 1, GF(2))
  orbit_of_polynomial([1, 1, 1], q=2)       # f[d=2,rep=1]
"""
import logging
from threading import RLock
from typing import Sequence

import galois
import sympy
from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from glchars.exceptions import FieldRealizationError, LabelError

from .orbits import VALUE, Orbit, check_field_size, check_prime_power, orbits_of_degree

logger = logging.getLogger(__name__)


@cached(cache=LRUCache(maxsize=32), lock=RLock())
def base_field(q: int) -> type[galois.FieldArray]:
    check_prime_power(q)
    return galois.GF(q)


# ─── Operaciones sobre F_q[t] ─────────────────────────────────────────────────

def as_poly(value, q: int | None = None) -> galois.Poly:
    """Acepta un galois.Poly o coeficientes de menor a mayor grado (ej: t²+t+1 <-> [1,1,1])."""
    if isinstance(value, galois.Poly):
        return value
    if q is None:
        raise LabelError('Hace falta q para interpretar una lista de coeficientes')
    GF = base_field(q)
    coeffs = [int(c) for c in value]
    if any(c < 0 or c >= q for c in coeffs):
        raise LabelError(f'Coeficientes fuera de F_{q}: {coeffs}')
    return galois.Poly(coeffs, field=GF, order='asc')


def poly_coeffs(poly: galois.Poly) -> list[int]:
    """Coeficientes enteros de menor a mayor grado."""
    return [int(c) for c in reversed(poly.coeffs)]


def is_zero(poly: galois.Poly) -> bool:
    return poly.degree == 0 and int(poly.coeffs[0]) == 0


def is_irreducible(poly: galois.Poly) -> bool:
    return poly.degree >= 1 and poly.is_irreducible()


def poly_to_string(poly: galois.Poly, var: str = 't') -> str:
    terms = []
    for power, coeff in reversed(list(enumerate(poly_coeffs(poly)))):
        if not coeff:
            continue
        mono = '' if power == 0 else (var if power == 1 else f'{var}^{power}')
        if not mono:
            terms.append(str(coeff))
        else:
            terms.append(mono if coeff == 1 else f'{coeff}*{mono}')
    return ' + '.join(terms) or '0'


# ─── Realización ──────────────────────────────────────────────────────────────

class FieldRealization:
    """F_{q^d} como anillo de restos F_q[y]/(g), con y de orden multiplicativo q^d − 1."""

    def __init__(self, q: int, d: int, modulus: galois.Poly):
        self.q       = q
        self.d       = d
        self.modulus = modulus
        self.GF      = modulus.field
        self.order   = q ** d - 1
        self.one     = galois.Poly.One(self.GF)
        self.zero    = galois.Poly.Zero(self.GF)
        self.generator = galois.Poly([1, 0], field=self.GF) % modulus

    def __repr__(self):
        return f'FieldRealization(q={self.q}, d={self.d}, g={self.modulus})'

    def mul(self, a: galois.Poly, b: galois.Poly) -> galois.Poly:
        return (a * b) % self.modulus

    def power(self, e: int, element: galois.Poly | None = None) -> galois.Poly:
        base = self.generator if element is None else element
        return pow(base, e, self.modulus)

    def frobenius(self, element: galois.Poly) -> galois.Poly:
        return pow(element, self.q, self.modulus)

    def evaluate(self, poly: galois.Poly, element: galois.Poly) -> galois.Poly:
        """poly(element) en el anillo de restos (Horner)."""
        acc = self.zero
        for coeff in poly.coeffs:
            acc = (acc * element + galois.Poly([int(coeff)], field=self.GF)) % self.modulus
        return acc

    def element_order(self, element: galois.Poly) -> int:
        """Orden multiplicativo a partir de la factorización de q^d − 1."""
        if is_zero(element % self.modulus):
            raise FieldRealizationError('El cero no tiene orden multiplicativo')
        check_field_size(self.q, self.d)
        order = self.order
        if pow(element, order, self.modulus) != self.one:
            raise FieldRealizationError(f'{element} no es una unidad de F_{self.q}^{self.d}')
        for p, mult in sympy.factorint(self.order).items():
            for _ in range(mult):
                if order % p == 0 and pow(element, order // p, self.modulus) == self.one:
                    order //= p
        return order

    def is_primitive(self, element: galois.Poly) -> bool:
        if is_zero(element % self.modulus):
            return False
        if pow(element, self.order, self.modulus) != self.one:
            return False
        return all(
            pow(element, self.order // p, self.modulus) != self.one
            for p in sympy.factorint(self.order)
        )

    def log(self, element: galois.Poly) -> int:
        """
        Logaritmo discreto en base y: el e en [0, q^d − 1) con y^e = element.

        Usa una tabla completa de potencias, cacheada por realización y limitada
        por GLCHARS_MAX_FIELD_SIZE.
        """
        element = element % self.modulus
        if is_zero(element):
            raise FieldRealizationError('El cero no tiene logaritmo discreto')
        try:
            return _log_table(self)[_coeff_key(element)]
        except KeyError:
            raise FieldRealizationError(f'{element} no es una potencia de y en F_{self.q}^{self.d}') from None


def _coeff_key(poly: galois.Poly) -> tuple[int, ...]:
    return tuple(int(c) for c in poly.coeffs)


@cached(cache=LRUCache(maxsize=8), lock=RLock(),
        key=lambda field: hashkey(field.q, field.d, _coeff_key(field.modulus)))
def _log_table(field: FieldRealization) -> dict[tuple[int, ...], int]:
    check_field_size(field.q, field.d)
    table, current = {}, field.one
    for e in range(field.order):
        table.setdefault(_coeff_key(current), e)
        current = field.mul(current, field.generator)
    logger.debug('Tabla de logaritmos de F_%s^%s: %s entradas', field.q, field.d, len(table))
    return table


def _divisors_below(d: int) -> list[int]:
    return [k for k in sympy.divisors(d) if k < d]


@cached(cache=LRUCache(maxsize=64), lock=RLock())
def realize(q: int, d: int) -> FieldRealization:
    """Construye (una sola vez por (q, d)) la realización de F_{q^d}."""
    check_prime_power(q)
    check_field_size(q, d)
    lower = {k: realize(q, k) for k in _divisors_below(d)}
    for g in galois.irreducible_polys(q, d):
        candidate = FieldRealization(q, d, g)
        if not candidate.is_primitive(candidate.generator):
            continue
        compatible = all(
            is_zero(candidate.evaluate(sub.modulus, candidate.power(candidate.order // sub.order)))
            for sub in lower.values()
        )
        if compatible:
            logger.info('F_%s^%s realizado con g = %s', q, d, g)
            return candidate
    raise FieldRealizationError(f'No hay polinomio primitivo compatible de grado {d} sobre F_{q}')


def min_poly(o: Orbit) -> galois.Poly:
    """Π_i (t − x^{q^i}) con x = y^rep en la realización de grado d."""
    if o.kind != VALUE:
        raise LabelError(f'{o!r} no es una órbita de valores')
    field = realize(o.q, o.degree)
    root = field.power(o.rep)
    coeffs = [field.one]            # de menor a mayor grado en t
    for _ in range(o.degree):
        shifted = [field.zero] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] = shifted[i] - field.mul(c, root)
        coeffs = shifted
        root = field.frobenius(root)
    constants = []
    for c in coeffs:
        if c.degree != 0:
            raise FieldRealizationError(f'El polinomio mínimo de {o!r} no tiene coeficientes en F_{o.q}')
        constants.append(int(c.coeffs[0]))
    return galois.Poly(constants, field=field.GF, order='asc')


@cached(cache=LRUCache(maxsize=64), lock=RLock())
def _orbit_lookup(q: int, d: int) -> dict[tuple[int, ...], Orbit]:
    return {tuple(poly_coeffs(min_poly(o))): o for o in orbits_of_degree(q, d, VALUE)}


def orbit_of_polynomial(f, q: int | None = None) -> Orbit:
    """Órbita o con min_poly(o) = f."""
    poly = as_poly(f, q)
    q = poly.field.order
    if poly.degree < 1 or int(poly.coeffs[0]) != 1:
        raise LabelError(f'{poly} no es mónico de grado >= 1')
    if poly.degree == 1 and int(poly.coeffs[-1]) == 0:
        raise FieldRealizationError('t no parametriza ninguna clase (autovalor nulo)')
    if not is_irreducible(poly):
        raise FieldRealizationError(f'{poly} es reducible sobre F_{q}')
    try:
        return _orbit_lookup(q, poly.degree)[tuple(poly_coeffs(poly))]
    except KeyError as exc:
        raise FieldRealizationError(f'Sin órbita para {poly}') from exc


def orbit_label_polynomials(orbits: Sequence[Orbit]) -> dict[Orbit, str]:
    return {o: poly_to_string(min_poly(o)) for o in orbits}
