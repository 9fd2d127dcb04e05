"""
Polinomios de Green X^λ_ρ(t), leídos de la expansión simbólica de Q_λ.1 en sumas de potencias.

Con t = q^{-1}: t^{|λ|} Q_λ.1 = Σ_ρ X^λ_ρ(t) p_ρ / z_ρ(t), así que
X^λ_ρ(t) = z_ρ(t) · t^{|λ|} · [p_ρ] Q_λ.1. Los polinomios se devuelven como
tuplas de coeficientes enteros de menor a mayor grado.
"""
import logging
from fractions import Fraction
from threading import RLock
from typing import Sequence

from cachetools import LRUCache, cached

from combinatorics.partitions import Partition, enumerate_partitions, z_t
from glchars.exceptions import InternalConsistencyError, LabelError

from .coefficients import SYMBOLIC
from .vertex import hl_Q

logger = logging.getLogger(__name__)


@cached(cache=LRUCache(maxsize=256), lock=RLock())
def green_row(lam: Sequence[int]) -> dict[Partition, tuple[int, ...]]:
    """{ρ: X^λ_ρ(t)} para todo ρ ⊢ |λ|."""
    lam = Partition(lam)
    t = SYMBOLIC.t
    expansion = hl_Q(lam, t, SYMBOLIC)
    normal = t ** lam.weight
    row = {}
    for rho in enumerate_partitions(lam.weight):
        value = expansion.coefficient(rho) * normal * z_t(rho, t)
        try:
            row[rho] = SYMBOLIC.integer_coefficients(value)
        except ValueError as exc:
            raise InternalConsistencyError(f'X^{lam.label()}_{rho.label()} no es entero: {exc}') from exc
    logger.info('Fila de Green de %s calculada (%s columnas)', lam.label(), len(row))
    return row


def green_X(lam: Sequence[int], rho: Sequence[int]) -> tuple[int, ...]:
    lam, rho = Partition(lam), Partition(rho)
    if lam.weight != rho.weight:
        raise LabelError(f'Pesos distintos: |{lam.label()}| = {lam.weight}, |{rho.label()}| = {rho.weight}')
    return green_row(lam)[rho]


def evaluate(coeffs: Sequence[int], value):
    """Horner; value puede ser entero, Fraction o Cyclo."""
    value = Fraction(value) if isinstance(value, int) else value
    acc = value * 0
    for c in reversed(coeffs):
        acc = acc * value + c
    return acc


def to_string(coeffs: Sequence[int], var: str = 't') -> str:
    """Polinomio de menor a mayor grado: (0, -1, 1) -> '-t + t^2'."""
    terms = []
    for power, c in enumerate(coeffs):
        if not c:
            continue
        mono = '' if power == 0 else (var if power == 1 else f'{var}^{power}')
        if not mono:
            body = str(abs(c))
        else:
            body = mono if abs(c) == 1 else f'{abs(c)}*{mono}'
        if not terms:
            terms.append(body if c > 0 else f'-{body}')
        else:
            terms.append(f'+ {body}' if c > 0 else f'- {body}')
    return ' '.join(terms) or '0'
