"""
GL_n(F_q) por fuerza bruta, solo para n y q diminutos.

Las matrices son tuplas de longitud n² (por filas) con las entradas en la
representación entera de galois; la aritmética de F_q va por tablas numpy
precalculadas. Las clases de conjugación salen por clausura bajo conjugación
por los generadores y el tipo de cada clase por la forma normal de Smith de
tI − g sobre F_q[t].

Uso:
  group = enumerate_group(2, 2)
  sorted(len(c) for c in group.classes)    # [1, 2, 3]
  class_type(identity_matrix(2), 2, 2)     # {f[d=1,rep=0]: 1,1}
"""
import logging
from collections import defaultdict, deque
from dataclasses import dataclass, field
from threading import RLock

import galois
import numpy as np
from cachetools import LRUCache, cached
from django.conf import settings
from tqdm import tqdm

from chartable.table import group_order
from combinatorics.partitions import ColoredPartition, Partition
from glchars.exceptions import InternalConsistencyError, LabelError, ResourceBoundError
from orbits.fields import base_field, is_zero, orbit_of_polynomial

logger = logging.getLogger(__name__)

Matrix = tuple[int, ...]


# ─── Aritmética de F_q por tablas ─────────────────────────────────────────────

class FqTables:
    """Tablas de suma, producto, opuesto e inverso de F_q sobre enteros 0..q−1."""

    def __init__(self, q: int):
        GF = base_field(q)
        x = GF.elements
        self.q   = q
        self.GF  = GF
        self.add = (x[:, None] + x[None, :]).view(np.ndarray).tolist()
        self.mul = (x[:, None] * x[None, :]).view(np.ndarray).tolist()
        self.neg = (-x).view(np.ndarray).tolist()
        self.inv = [0] + (GF(1) / x[1:]).view(np.ndarray).tolist()

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]


@cached(cache=LRUCache(maxsize=16), lock=RLock())
def fq_tables(q: int) -> FqTables:
    return FqTables(q)


def identity_matrix(n: int) -> Matrix:
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def matmul(a: Matrix, b: Matrix, n: int, tables: FqTables) -> Matrix:
    add, mul = tables.add, tables.mul
    out = []
    for i in range(n):
        row = a[i * n:(i + 1) * n]
        for j in range(n):
            s = 0
            for k in range(n):
                s = add[s][mul[row[k]][b[k * n + j]]]
            out.append(s)
    return tuple(out)


def matvec(a: Matrix, v: tuple[int, ...], n: int, tables: FqTables) -> tuple[int, ...]:
    add, mul = tables.add, tables.mul
    out = []
    for i in range(n):
        s = 0
        for k in range(n):
            s = add[s][mul[a[i * n + k]][v[k]]]
        out.append(s)
    return tuple(out)


def inverse(a: Matrix, n: int, tables: FqTables) -> Matrix:
    """Gauss–Jordan sobre [a | I]; LabelError si a es singular."""
    add, mul, neg, inv = tables.add, tables.mul, tables.neg, tables.inv
    rows = [list(a[i * n:(i + 1) * n]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise LabelError('Matriz singular')
        rows[col], rows[pivot] = rows[pivot], rows[col]
        scale = inv[rows[col][col]]
        rows[col] = [mul[scale][v] for v in rows[col]]
        for r in range(n):
            factor = rows[r][col]
            if r != col and factor:
                f = neg[factor]
                rows[r] = [add[v][mul[f][w]] for v, w in zip(rows[r], rows[col])]
    return tuple(v for row in rows for v in row[n:])


def generators(n: int, q: int) -> list[Matrix]:
    """Transvecciones I + a·E_ij (a ≠ 0) y diag(ω, 1, …, 1) con ω primitivo."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for a in range(1, q):
                m = list(identity_matrix(n))
                m[i * n + j] = a
                gens.append(tuple(m))
    if q > 2 and n:
        m = list(identity_matrix(n))
        m[0] = int(base_field(q).primitive_element)
        gens.append(tuple(m))
    return gens


# ─── Grupo y clases ───────────────────────────────────────────────────────────

@dataclass
class OracleGroup:
    n:          int
    q:          int
    elements:   list[Matrix]
    classes:    list[list[Matrix]]
    generators: list[Matrix] = field(default_factory=list)

    @property
    def tables(self) -> FqTables:
        return fq_tables(self.q)

    @property
    def order(self) -> int:
        return len(self.elements)

    def representatives(self) -> list[Matrix]:
        return [c[0] for c in self.classes]

    def class_labels(self) -> list[ColoredPartition]:
        return [class_type(rep, self.n, self.q) for rep in self.representatives()]

    def element_order(self, g: Matrix) -> int:
        one = identity_matrix(self.n)
        power, k = g, 1
        while power != one:
            power = matmul(power, g, self.n, self.tables)
            k += 1
        return k


def check_group_order(n: int, q: int) -> int:
    order = group_order(n, q)
    bound = settings.GLCHARS_MAX_GROUP_ORDER
    if order > bound:
        raise ResourceBoundError(f'|GL_{n}(F_{q})|', order, bound)
    return order


def _closure(start: Matrix, step, bar=None) -> list[Matrix]:
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for nxt in step(current):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
                if bar is not None:
                    bar.update(1)
    return sorted(seen)


def enumerate_group(n: int, q: int, progress: bool = False) -> OracleGroup:
    order = check_group_order(n, q)
    tables = fq_tables(q)
    gens = generators(n, q)
    one = identity_matrix(n)

    with tqdm(total=order, desc=f'GL_{n}(F_{q})', disable=not progress, initial=1) as bar:
        elements = _closure(one, lambda g: (matmul(g, s, n, tables) for s in gens), bar=bar)
    if len(elements) != order:
        raise InternalConsistencyError(f'Se generaron {len(elements)} elementos, se esperaban {order}')

    conjugators = [(s, inverse(s, n, tables)) for s in gens]

    def conjugates(h):
        return (matmul(matmul(s, h, n, tables), s_inv, n, tables) for s, s_inv in conjugators)

    classes, assigned = [], set()
    for g in elements:
        if g in assigned:
            continue
        cls = _closure(g, conjugates)
        assigned.update(cls)
        classes.append(cls)
    logger.info('GL_%s(F_%s): %s elementos, %s clases', n, q, len(elements), len(classes))
    return OracleGroup(n=n, q=q, elements=elements, classes=classes, generators=gens)


# ─── Forma normal de Smith y tipo de clase ────────────────────────────────────

def _monic(poly: galois.Poly) -> galois.Poly:
    lead = galois.Poly([poly.coeffs[0]], field=poly.field)
    return poly // lead


def smith_normal_form(matrix: list[list[galois.Poly]]) -> list[galois.Poly]:
    """
    Factores invariantes mónicos d_1 | d_2 | … de una matriz cuadrada sobre F_q[t].

    Pivote de grado mínimo; se repite la eliminación de fila y columna hasta
    que el pivote divide a todo el bloque restante.
    """
    a = [list(row) for row in matrix]
    size = len(a)
    if not size:
        return []
    GF = a[0][0].field
    zero = galois.Poly.Zero(GF)
    factors = []
    for s in range(size):
        while True:
            entries = [(a[i][j].degree, i, j) for i in range(s, size) for j in range(s, size) if not is_zero(a[i][j])]
            if not entries:
                return factors + [zero] * (size - s)
            _, pi, pj = min(entries)
            a[s], a[pi] = a[pi], a[s]
            for row in a:
                row[s], row[pj] = row[pj], row[s]
            pivot = a[s][s]
            clean = True
            for i in range(s + 1, size):
                if not is_zero(a[i][s]):
                    quotient = a[i][s] // pivot
                    a[i] = [x - quotient * y for x, y in zip(a[i], a[s])]
                    clean = clean and is_zero(a[i][s])
            for j in range(s + 1, size):
                if not is_zero(a[s][j]):
                    quotient = a[s][j] // pivot
                    for row in a:
                        row[j] = row[j] - quotient * row[s]
                    clean = clean and is_zero(a[s][j])
            if not clean:
                continue
            bad = next((i for i in range(s + 1, size) for j in range(s + 1, size)
                        if not is_zero(a[i][j] % pivot)), None)
            if bad is None:
                break
            a[s] = [x + y for x, y in zip(a[s], a[bad])]
        factors.append(_monic(a[s][s]))
    return factors


def characteristic_matrix(g: Matrix, n: int, q: int) -> list[list[galois.Poly]]:
    """tI − g con entradas en F_q[t]."""
    GF = base_field(q)
    neg = fq_tables(q).neg
    return [
        [galois.Poly([1, neg[g[i * n + j]]] if i == j else [neg[g[i * n + j]]], field=GF) for j in range(n)]
        for i in range(n)
    ]


def class_type(g: Matrix, n: int, q: int) -> ColoredPartition:
    """μ(f) = exponentes de f en los factores invariantes de tI − g."""
    parts = defaultdict(list)
    for factor in smith_normal_form(characteristic_matrix(g, n, q)):
        if factor.degree == 0:
            continue
        irreducibles, multiplicities = factor.factors()
        for p, e in zip(irreducibles, multiplicities):
            parts[orbit_of_polynomial(p)].append(int(e))
    return ColoredPartition({orbit: Partition(sorted(es, reverse=True)) for orbit, es in parts.items()})
