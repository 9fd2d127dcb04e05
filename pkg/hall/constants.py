"""
Constantes de estructura del álgebra de Hall, calculadas a través del isomorfismo con
las funciones simétricas.

G^λ_{μν}(q) = q^{n(λ)−n(μ)−n(ν)} · ⟨P_μ P_ν, Q_λ⟩ con t = q^{-1}: el producto de
funciones P se expande en la base {P_λ} emparejando con la base dual {Q_λ}.

Uso:
  hall_G((1, 1), (1,), (1,), 3)      # -> 4 (rectas de F_3²)
  pieri_G((1, 1), (1,), 1, 3)        # -> 4
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from threading import RLock
from typing import Mapping, Sequence

from cachetools import LRUCache, cached

from combinatorics.partitions import (
    ColoredPartition, Partition, conjugate, enumerate_partitions, gauss_binomial, is_vertical_strip, n_stat,
)
from glchars.exceptions import InternalConsistencyError, LabelError
from symfunc.coefficients import SYMBOLIC
from symfunc.vertex import HALL_LITTLEWOOD, hl_P, hl_Q, inner_single

logger = logging.getLogger(__name__)


def _check_q(q: int):
    if q < 2:
        raise LabelError(f'q debe ser >= 2 (recibido {q})')


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise InternalConsistencyError(f'{what} = {value} no es un entero no negativo')
    return value.numerator


# ─── Pieri ────────────────────────────────────────────────────────────────────

def strip_coeff(nu: Sequence[int], mu: Sequence[int], r: int, t):
    """Π_i [ν'_i − ν'_{i+1}, ν'_i − μ'_i]_t si ν/μ es una franja vertical de tamaño r; 0 si no."""
    nu, mu = Partition(nu), Partition(mu)
    t = Fraction(t) if isinstance(t, int) else t
    if not is_vertical_strip(nu, mu, r):
        return t * 0
    nu_c, mu_c = conjugate(nu), conjugate(mu)
    result = t ** 0
    for i, column in enumerate(nu_c):
        following = nu_c[i + 1] if i + 1 < len(nu_c) else 0
        removed = column - (mu_c[i] if i < len(mu_c) else 0)
        result *= gauss_binomial(column - following, removed, t)
    return result


def pieri_G(lam: Sequence[int], mu: Sequence[int], r: int, q: int) -> int:
    """G^λ_{μ(1^r)}(q) por la fórmula cerrada de franjas verticales."""
    _check_q(q)
    lam, mu = Partition(lam), Partition(mu)
    if not is_vertical_strip(lam, mu, r):
        return 0
    exponent = n_stat(lam) - n_stat(mu) - r * (r - 1) // 2
    value = Fraction(q) ** exponent * strip_coeff(lam, mu, r, Fraction(1, q))
    return _as_integer(value, f'G^{lam.label()}_{mu.label()},(1^{r})({q})')


# ─── Constantes generales ─────────────────────────────────────────────────────

@cached(cache=LRUCache(maxsize=4096), lock=RLock())
def _structure_constants(mu: Partition, nu: Partition, q: int) -> dict[Partition, Fraction]:
    """{λ: ⟨P_μ P_ν, Q_λ⟩} con t = 1/q."""
    t = Fraction(1, q)
    prod = hl_P(mu, t) * hl_P(nu, t)
    return {
        lam: inner_single(prod, hl_Q(lam, t), HALL_LITTLEWOOD, t)
        for lam in enumerate_partitions(mu.weight + nu.weight)
    }


@cached(cache=LRUCache(maxsize=1024), lock=RLock())
def _symbolic_structure_constants(mu: Partition, nu: Partition) -> dict:
    t = SYMBOLIC.t
    prod = hl_P(mu, t, SYMBOLIC) * hl_P(nu, t, SYMBOLIC)
    return {
        lam: inner_single(prod, hl_Q(lam, t, SYMBOLIC), HALL_LITTLEWOOD, t)
        for lam in enumerate_partitions(mu.weight + nu.weight)
    }


def hall_G(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], q: int) -> int:
    """Número de Hall G^λ_{μν}(q); 0 si |λ| ≠ |μ| + |ν|."""
    _check_q(q)
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.weight != mu.weight + nu.weight:
        return 0
    # el producto es conmutativo: se cachea con los factores ordenados
    first, second = sorted((mu, nu))
    f = _structure_constants(first, second, q)[lam]
    value = f * Fraction(q) ** (n_stat(lam) - n_stat(mu) - n_stat(nu))
    return _as_integer(value, f'G^{lam.label()}_{mu.label()},{nu.label()}({q})')


def hall_polynomial(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> tuple[int, ...]:
    """G^λ_{μν} como polinomio en q (coeficientes enteros de menor a mayor grado)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.weight != mu.weight + nu.weight:
        return (0,)
    first, second = sorted((mu, nu))
    f = SYMBOLIC.integer_coefficients(_symbolic_structure_constants(first, second)[lam])
    shift = n_stat(lam) - n_stat(mu) - n_stat(nu)
    # f(t) = Σ c_i t^i  ->  q^shift f(1/q) = Σ c_i q^{shift−i}
    if any(c for i, c in enumerate(f) if i > shift):
        raise InternalConsistencyError(f'G^{lam.label()}_{mu.label()},{nu.label()} no es un polinomio en q')
    if shift < 0:
        return (0,)
    coeffs = [0] * (shift + 1)
    for i, c in enumerate(f):
        coeffs[shift - i] += c
    return tuple(coeffs)


@dataclass(frozen=True)
class HallConstantKey:
    lam: Partition
    mu:  Partition
    nu:  Partition
    q:   int

    def __post_init__(self):
        for name in ('lam', 'mu', 'nu'):
            object.__setattr__(self, name, Partition(getattr(self, name)))
        _check_q(self.q)

    @property
    def balanced(self) -> bool:
        return self.lam.weight == self.mu.weight + self.nu.weight

    def value(self) -> int:
        return hall_G(self.lam, self.mu, self.nu, self.q) if self.balanced else 0


# ─── Producto coloreado ───────────────────────────────────────────────────────

def colored_hall_product(mu: ColoredPartition, nu: ColoredPartition, q: int) -> dict[ColoredPartition, int]:
    """
    π_μ̃ ∘ π_ν̃ = Σ_λ̃ Π_f G^{λ(f)}_{μ(f)ν(f)}(q_f) π_λ̃, con q_f = q^{d(f)}.

    Devuelve solo los términos no nulos.
    """
    _check_q(q)
    degrees: Mapping = {}
    for label, degree, _ in mu.triples() + nu.triples():
        degrees[label] = degree
    colors = sorted(degrees)
    options = []
    for label in colors:
        m, n = mu[label], nu[label]
        q_f = q ** degrees[label]
        choices = []
        for lam in enumerate_partitions(m.weight + n.weight):
            value = hall_G(lam, m, n, q_f)
            if value:
                choices.append((lam, value))
        options.append(choices)
    result = {}
    for combo in product(*options):
        value = 1
        for _, g in combo:
            value *= g
        key = ColoredPartition([(label, lam) for label, (lam, _) in zip(colors, combo)], degrees=degrees)
        result[key] = value
    logger.debug('Producto de Hall %r ∘ %r: %s términos', mu, nu, len(result))
    return result
