"""
Órbitas de Frobenius en M_k (valores, Φ) y en M_k^* (caracteres, Φ*).

Toda la lógica vive en el espacio de exponentes: una órbita de grado d es la
clase q-ciclotómica {j, jq, jq², …} módulo q^d − 1, representada por su
mínimo. La inmersión de nivel d a nivel k (d | k) multiplica por
(q^k − 1)/(q^d − 1), tanto para valores como para caracteres.

Uso:
  enumerate_orbits(2, 2)                      # [f[d=1,rep=0], f[d=2,rep=1]]
  pairing(character_orbit(2, 2, 1), value_orbit(2, 2, 1), 2)   # -> -1/2
"""
import logging
from dataclasses import dataclass
from threading import RLock

import sympy
from cachetools import LRUCache, cached
from cachetools.keys import hashkey
from django.conf import settings
from sympy.ntheory import mobius

from cyclotomic.cyclo import Cyclo, CyclotomicField, cyclotomic_field
from glchars.exceptions import LabelError, ResourceBoundError

logger = logging.getLogger(__name__)

VALUE     = 'value'
CHARACTER = 'character'
KINDS     = (VALUE, CHARACTER)


def check_prime_power(q: int) -> tuple[int, int]:
    """q = p^e con p primo; devuelve (p, e)."""
    if q < 2:
        raise LabelError(f'q debe ser una potencia de primo >= 2 (recibido {q})')
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise LabelError(f'q = {q} no es potencia de un primo')
    (p, e), = factors.items()
    return p, e


def check_field_size(q: int, d: int):
    bound = settings.GLCHARS_MAX_FIELD_SIZE
    if q ** d > bound:
        raise ResourceBoundError(f'q^d ({q}^{d})', q ** d, bound)


# ─── Clases q-ciclotómicas ────────────────────────────────────────────────────

def cyclotomic_coset(j: int, q: int, d: int) -> tuple[int, ...]:
    modulus = q ** d - 1
    elements, current = set(), j % modulus if modulus > 1 else 0
    while current not in elements:
        elements.add(current)
        current = (current * q) % modulus if modulus > 1 else 0
    return tuple(sorted(elements))


@dataclass(frozen=True, order=True)
class Orbit:
    kind:   str
    q:      int
    degree: int
    rep:    int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise LabelError(f'Tipo de órbita desconocido: {self.kind}')
        if self.degree < 1:
            raise LabelError(f'Grado de órbita no válido: {self.degree}')
        coset = cyclotomic_coset(self.rep, self.q, self.degree)
        if len(coset) != self.degree or coset[0] != self.rep:
            raise LabelError(
                f'{self.rep} no es el representante canónico de una órbita de grado {self.degree} '
                f'módulo {self.q}^{self.degree}-1'
            )

    @property
    def modulus(self) -> int:
        """q^d − 1"""
        return self.q ** self.degree - 1

    @property
    def q_f(self) -> int:
        return self.q ** self.degree

    def coset(self) -> tuple[int, ...]:
        return cyclotomic_coset(self.rep, self.q, self.degree)

    def dual(self) -> 'Orbit':
        """Identificación Φ <-> Φ* por identidad de exponentes."""
        other = CHARACTER if self.kind == VALUE else VALUE
        return Orbit(other, self.q, self.degree, self.rep)

    def negate(self) -> 'Orbit':
        """Órbita de −rep (conjugación compleja en el lado de caracteres)."""
        return canonical_orbit(self.kind, self.q, self.degree, -self.rep)

    def __repr__(self):
        prefix = 'f' if self.kind == VALUE else 'φ'
        return f'{prefix}[d={self.degree},rep={self.rep}]'


def canonical_orbit(kind: str, q: int, d: int, j: int) -> Orbit:
    coset = cyclotomic_coset(j, q, d)
    if len(coset) != d:
        raise LabelError(f'El exponente {j} tiene periodo {len(coset)} != {d} módulo {q}^{d}-1')
    return Orbit(kind, q, d, coset[0])


def value_orbit(q: int, d: int, j: int) -> Orbit:
    return canonical_orbit(VALUE, q, d, j)


def character_orbit(q: int, d: int, j: int) -> Orbit:
    return canonical_orbit(CHARACTER, q, d, j)


@cached(cache=LRUCache(maxsize=256), lock=RLock())
def _representatives(q: int, d: int) -> tuple[int, ...]:
    modulus = q ** d - 1
    seen, reps = set(), []
    for j in range(modulus):
        if j in seen:
            continue
        coset = cyclotomic_coset(j, q, d)
        seen.update(coset)
        if len(coset) == d:
            reps.append(j)
    return tuple(reps)


def orbits_of_degree(q: int, d: int, kind: str = VALUE) -> list[Orbit]:
    check_field_size(q, d)
    return [Orbit(kind, q, d, j) for j in _representatives(q, d)]


def enumerate_orbits(q: int, d_max: int, kind: str = VALUE) -> list[Orbit]:
    """Todas las órbitas de grado <= d_max, ordenadas por grado y representante."""
    check_prime_power(q)
    if d_max < 1:
        return []
    check_field_size(q, d_max)
    result = []
    for d in range(1, d_max + 1):
        result.extend(orbits_of_degree(q, d, kind))
    logger.debug('q=%s: %s órbitas de grado <= %s', q, len(result), d_max)
    return result


def count_irreducible(q: int, d: int) -> int:
    """Número de polinomios mónicos irreducibles de grado d sobre F_q distintos de t."""
    total = sum(mobius(e) * q ** (d // e) for e in sympy.divisors(d)) // d
    return total - 1 if d == 1 else total


# ─── Inmersión y emparejamiento ───────────────────────────────────────────────

def embed_exponent(j: int, q: int, d: int, k: int) -> int:
    if k % d:
        raise LabelError(f'El grado {d} no divide al nivel {k}')
    big = q ** k - 1
    if big == 1:
        return 0
    return (j * (big // (q ** d - 1))) % big


def embed(o: Orbit, k: int) -> tuple[int, ...]:
    """Exponentes de la órbita vistos en nivel k (módulo q^k − 1)."""
    return tuple(sorted({embed_exponent(j, o.q, o.degree, k) for j in o.coset()}))


def _check_pair(phi: Orbit, f: Orbit):
    if phi.kind != CHARACTER or f.kind != VALUE:
        raise LabelError(f'Se esperaba (órbita de caracteres, órbita de valores), recibido ({phi!r}, {f!r})')
    if phi.q != f.q:
        raise LabelError(f'Órbitas sobre cuerpos distintos: q={phi.q} y q={f.q}')


def _context(q: int, k: int, field: CyclotomicField | None) -> CyclotomicField:
    return field if field is not None else cyclotomic_field(q ** k - 1)


def pairing_at(phi: Orbit, f: Orbit, k: int, x: int, field: CyclotomicField | None = None) -> Cyclo:
    """(1/d(φ)) Σ_{ξ∈φ} ζ^{ξ·x} para un exponente concreto x de f en nivel k."""
    _check_pair(phi, f)
    field = _context(phi.q, k, field)
    if k % phi.degree or k % f.degree:
        return field.zero
    level = phi.q ** k - 1
    total = field.zero
    for xi in embed(phi, k):
        total = total + field.root(level, xi * x)
    return total / phi.degree


@cached(cache=LRUCache(maxsize=65536), lock=RLock(),
        key=lambda phi, f, k, field=None: hashkey(phi, f, k, field.m if field is not None else None))
def pairing(phi: Orbit, f: Orbit, k: int, field: CyclotomicField | None = None) -> Cyclo:
    """(φ, f)_k con x el representante de f; cero si d(φ) ∤ k o d(f) ∤ k."""
    _check_pair(phi, f)
    field = _context(phi.q, k, field)
    if k % phi.degree or k % f.degree:
        return field.zero
    return pairing_at(phi, f, k, embed_exponent(f.rep, f.q, f.degree, k), field)


def pairing_symmetric(phi: Orbit, f: Orbit, k: int, field: CyclotomicField | None = None) -> Cyclo:
    """(1/d(f)) Σ_{x∈f} ⟨ξ, x⟩_k con ξ fijo en φ."""
    _check_pair(phi, f)
    field = _context(phi.q, k, field)
    if k % phi.degree or k % f.degree:
        return field.zero
    level = phi.q ** k - 1
    xi = embed_exponent(phi.rep, phi.q, phi.degree, k)
    total = field.zero
    for x in embed(f, k):
        total = total + field.root(level, xi * x)
    return total / f.degree
