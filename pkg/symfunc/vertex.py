"""
Operadores de vértice sobre el espacio de Fock de un color, como extractores de componentes.

Todos los operadores son productos normales exp(creación)·exp(aniquilación).
La parte de aniquilación es una exponencial de derivadas, es decir, una
traslación p_k -> p_k + c_k z^{±k}; sobre un polinomio se desarrolla de forma
finita. Después se multiplica por la componente de creación que completa el
grado pedido en z.

  Q(z):  creación (q^k − 1)/k · p_k z^k,  traslación p_k -> p_k − t^k z^{−k}   (t = 1/q)
  S(z):  creación p_k z^k / k,            traslación p_k -> p_k − z^{−k}
  E*(z): sin creación,                    traslación p_k -> p_k + (−1)^{k−1} t^k/(1 − t^k) z^k
  E(z):  multiplicación por e_r

Uso:
  hl_Q(Partition((1, 1)), Fraction(1, 2))     # (3/4)*(p[1,1] - p[2])
"""
import logging
from collections import defaultdict
from itertools import product
from math import comb
from threading import RLock
from typing import Sequence

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from combinatorics.partitions import Partition, b_t, enumerate_partitions, z_stat, z_t

from .coefficients import field_for
from .powersum import PowerSumPoly

logger = logging.getLogger(__name__)

SCHUR = 'schur'
HALL_LITTLEWOOD = 'hl'


def _translate(v: PowerSumPoly, shift) -> dict[int, PowerSumPoly]:
    """
    Aplica p_k -> p_k + shift(k)·w^k a v y agrupa por el grado s en w.

    Devuelve {s: componente}; cada monomio p_λ se reparte según cuántas
    copias de cada parte se sustituyen (binomial de la multiplicidad).
    """
    field = v.field
    buckets: dict[int, dict] = defaultdict(dict)
    for lam, coeff in v.items():
        mult = lam.multiplicities()
        parts = sorted(mult)
        for choice in product(*(range(mult[k] + 1) for k in parts)):
            degree = sum(j * k for j, k in zip(choice, parts))
            value = coeff
            rest = []
            for k, j in zip(parts, choice):
                if j:
                    value = value * (comb(mult[k], j) * shift(k) ** j)
                rest.extend([k] * (mult[k] - j))
            key = Partition(sorted(rest, reverse=True))
            bucket = buckets[degree]
            bucket[key] = bucket[key] + value if key in bucket else value
    return {degree: PowerSumPoly(field, terms) for degree, terms in buckets.items()}


def _resolve(t, field):
    field = field or field_for(t)
    return field, field.convert(t)


# ─── Componentes de creación ──────────────────────────────────────────────────

@cached(cache=LRUCache(maxsize=1024), lock=RLock(), key=lambda field, t, j: hashkey(field.key, t, j))
def _q_creation(field, t, j: int) -> PowerSumPoly:
    """Σ_{ρ⊢j} Π_i (q^{ρ_i} − 1) / z_ρ · p_ρ, el coeficiente de z^j en la exponencial de creación."""
    q = field.one / t
    terms = {}
    for rho in enumerate_partitions(j):
        coeff = field.one / z_stat(rho)
        for part in rho:
            coeff = coeff * (q ** part - 1)
        terms[rho] = coeff
    return PowerSumPoly(field, terms)


@cached(cache=LRUCache(maxsize=1024), lock=RLock(), key=lambda field, j: hashkey(field.key, j))
def _h_creation(field, j: int) -> PowerSumPoly:
    return PowerSumPoly(field, {rho: field.one / z_stat(rho) for rho in enumerate_partitions(j)})


# ─── Operadores ───────────────────────────────────────────────────────────────

def vertex_Q_apply(n: int, v: PowerSumPoly, t, field=None) -> PowerSumPoly:
    """Componente z^n de Q(z) aplicada a v."""
    field = field or v.field
    t = field.convert(t)
    result = PowerSumPoly.zero(field)
    for s, piece in _translate(v, lambda k: -(t ** k)).items():
        if n + s < 0:
            continue
        result = result + _q_creation(field, t, n + s) * piece
    return result


def vertex_S_apply(n: int, v: PowerSumPoly) -> PowerSumPoly:
    """Componente z^n del operador de Schur; S_{λ1}…S_{λl}.1 = s_λ."""
    field = v.field
    result = PowerSumPoly.zero(field)
    for s, piece in _translate(v, lambda k: -field.one).items():
        if n + s < 0:
            continue
        result = result + _h_creation(field, n + s) * piece
    return result


def vertex_Estar_apply(r: int, v: PowerSumPoly, t, field=None) -> PowerSumPoly:
    """Componente z^r de E*(z), el adjunto de la multiplicación por e_r en la métrica hl."""
    field = field or v.field
    t = field.convert(t)
    if r < 0:
        return PowerSumPoly.zero(field)
    pieces = _translate(v, lambda k: (-1) ** (k - 1) * t ** k / (1 - t ** k))
    return pieces.get(r, PowerSumPoly.zero(field))


def vertex_E_apply(r: int, v: PowerSumPoly) -> PowerSumPoly:
    from .schur import e_in_p

    if r < 0:
        return PowerSumPoly.zero(v.field)
    e_r = e_in_p(r).map_coefficients(v.field.convert, v.field)
    return e_r * v


def vertex_Q_sequence(seq: Sequence[int], t, field=None) -> PowerSumPoly:
    """Q_{a1} Q_{a2} … Q_{al}.1 para una sucesión arbitraria de enteros."""
    field, t = _resolve(t, field)
    v = PowerSumPoly.one(field)
    for n in reversed(seq):
        v = vertex_Q_apply(n, v, t, field)
    return v


@cached(cache=LRUCache(maxsize=2048), lock=RLock(),
        key=lambda lam, t, field=None: hashkey(Partition(lam), (field or field_for(t)).key, t))
def hl_Q(lam: Sequence[int], t, field=None) -> PowerSumPoly:
    """Q_λ.1 = Q_{λ1}(… Q_{λl}.1 …)"""
    lam = Partition(lam)
    result = vertex_Q_sequence(tuple(lam), t, field)
    logger.debug('Q_%s.1 calculado en t=%s (%s monomios)', lam.label(), t, len(result))
    return result


def hl_P(lam: Sequence[int], t, field=None) -> PowerSumPoly:
    """P_λ = q^{−|λ|} b_λ(q^{−1})^{−1} Q_λ.1, la base dual de {Q_λ} en la métrica hl."""
    field, t = _resolve(t, field)
    lam = Partition(lam)
    return hl_Q(lam, t, field).scale(t ** lam.weight / b_t(lam, t))


def metric_weight(lam: Partition, metric: str = SCHUR, t=None):
    """⟨p_λ, p_λ⟩: z_λ (Schur) o z_λ(t)·t^{|λ|} (Hall-Littlewood, t = q_f^{-1})."""
    if metric == SCHUR:
        return z_stat(lam)
    if metric == HALL_LITTLEWOOD:
        if t is None:
            raise ValueError('La métrica hl necesita el parámetro t')
        return z_t(lam, t) * t ** sum(lam)
    raise ValueError(f'Métrica desconocida: {metric}')


def inner_single(u: PowerSumPoly, v: PowerSumPoly, metric: str = SCHUR, t=None):
    """Forma bilineal diagonal en la base p_λ (sin conjugar coeficientes)."""
    u._check(v)
    field = u.field
    total = field.zero
    for lam, coeff in u.items():
        other = v.terms.get(lam)
        if other is None:
            continue
        total = total + coeff * other * field.convert(metric_weight(lam, metric, t))
    return total
