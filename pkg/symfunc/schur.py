"""
Funciones de Schur, elementales y completas en la base de sumas de potencias.
"""
import logging
from fractions import Fraction
from itertools import permutations
from threading import RLock
from typing import Sequence

from cachetools import LRUCache, cached
from sympy.combinatorics import Permutation as SymPermutation

from combinatorics.partitions import Partition, enumerate_partitions, hook_lengths, n_stat, z_stat
from glchars.exceptions import LabelError

from .coefficients import QQ
from .powersum import PowerSumPoly

logger = logging.getLogger(__name__)


@cached(cache=LRUCache(maxsize=256), lock=RLock())
def h_in_p(m: int) -> PowerSumPoly:
    """h_m = Σ_{ρ⊢m} p_ρ / z_ρ; h_0 = 1 y h_m = 0 para m < 0."""
    if m < 0:
        return PowerSumPoly.zero(QQ)
    return PowerSumPoly(QQ, {rho: Fraction(1, z_stat(rho)) for rho in enumerate_partitions(m)})


@cached(cache=LRUCache(maxsize=256), lock=RLock())
def e_in_p(m: int) -> PowerSumPoly:
    """e_m = Σ_{ρ⊢m} ε(ρ) p_ρ / z_ρ con ε(ρ) = (−1)^{|ρ|−l(ρ)}."""
    if m < 0:
        return PowerSumPoly.zero(QQ)
    return PowerSumPoly(QQ, {
        rho: Fraction((-1) ** (m - len(rho)), z_stat(rho)) for rho in enumerate_partitions(m)
    })


@cached(cache=LRUCache(maxsize=512), lock=RLock())
def schur_in_p(lam: Sequence[int]) -> PowerSumPoly:
    """Jacobi-Trudi: s_λ = Σ_{w∈S_l} sgn(w) Π_i h_{λ_i − i + w(i)}."""
    lam = Partition(lam)
    length = len(lam)
    result = PowerSumPoly.zero(QQ)
    for w in permutations(range(length)):
        term = PowerSumPoly.one(QQ)
        for i, j in enumerate(w):
            term = term * h_in_p(lam[i] - i + j)
            if term.is_zero():
                break
        if term.is_zero():
            continue
        sign = SymPermutation(list(w)).signature() if length > 1 else 1
        result = result + term.scale(sign)
    logger.debug('s_%s: %s monomios', lam.label(), len(result))
    return result


def _check_weights(lam: Partition, rho: Partition):
    if lam.weight != rho.weight:
        raise LabelError(f'Pesos distintos: |{lam.label()}| = {lam.weight}, |{rho.label()}| = {rho.weight}')


def symgroup_char(lam: Sequence[int], rho: Sequence[int]) -> int:
    """χ^λ_ρ = z_ρ · [p_ρ] s_λ (fórmula de Frobenius)."""
    lam, rho = Partition(lam), Partition(rho)
    _check_weights(lam, rho)
    value = schur_in_p(lam).coefficient(rho) * z_stat(rho)
    if value.denominator != 1:
        raise ArithmeticError(f'χ^{lam.label()}_{rho.label()} no es entero: {value}')
    return value.numerator


def littlewood_eval(lam: Sequence[int], t):
    """s_λ(t, t², …) = t^{|λ|+n(λ)} / Π_x (1 − t^{h(x)})."""
    lam = Partition(lam)
    t = Fraction(t) if isinstance(t, int) else t
    den = t ** 0
    for hook in hook_lengths(lam):
        den *= 1 - t ** hook
    if den == 0:
        raise ZeroDivisionError(f'Polo de s_{lam.label()} en t = {t}')
    return t ** (lam.weight + n_stat(lam)) / den


def principal_specialization(poly: PowerSumPoly, t):
    """Sustituye p_k -> t^k / (1 − t^k)."""
    t = Fraction(t) if isinstance(t, int) else t
    total = t * 0
    for lam, coeff in poly.items():
        value = coeff
        for part in lam:
            den = 1 - t ** part
            if den == 0:
                raise ZeroDivisionError(f'Polo de p_{part} en t = {t}')
            value = value * t ** part / den
        total = total + value
    return total
