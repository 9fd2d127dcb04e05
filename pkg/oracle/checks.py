"""
Comprobaciones de fuerza bruta contra los datos calculados por fórmula.

Todas devuelven un `Report`; si el grupo supera GLCHARS_MAX_GROUP_ORDER la
comprobación queda como 'skipped' con el motivo.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from chartable.reports import Report
from chartable.table import (
    CharacterTable, centralizer_order, class_labels, class_size, group_order, identity_class,
)
from combinatorics.partitions import ColoredPartition
from cyclotomic.cyclo import Cyclo
from glchars.exceptions import LabelError, ResourceBoundError
from hall.constants import colored_hall_product

from .matrices import FqTables, Matrix, OracleGroup, class_type, enumerate_group, fq_tables, matvec

logger = logging.getLogger(__name__)

ClassFunction = dict[ColoredPartition, int]


# ─── Subespacios y banderas ───────────────────────────────────────────────────

@dataclass(frozen=True)
class Subspace:
    """Subespacio de F_q^n dado por su base en forma escalonada reducida."""
    n:      int
    rows:   tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def complement(self) -> tuple[int, ...]:
        """Columnas sin pivote: base e_j del cociente V/W."""
        return tuple(j for j in range(self.n) if j not in self.pivots)


def subspaces(n: int, k: int, q: int) -> Iterator[Subspace]:
    """Los [n, k]_q subespacios de dimensión k, uno por forma escalonada reducida."""
    if not 0 <= k <= n:
        raise LabelError(f'Dimensión {k} fuera de rango para F_{q}^{n}')
    for pivots in combinations(range(n), k):
        free = [(r, j) for r, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivots]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, j), v in zip(free, values):
                rows[r][j] = v
            yield Subspace(n, tuple(tuple(row) for row in rows), pivots)


def _reduce(v: Sequence[int], space: Subspace, tables: FqTables) -> list[int]:
    """v − Σ_r v[p_r]·w_r; es cero si y solo si v ∈ W."""
    v = list(v)
    for row, p in zip(space.rows, space.pivots):
        c = v[p]
        if c:
            nc = tables.neg[c]
            v = [tables.add[a][tables.mul[nc][b]] for a, b in zip(v, row)]
    return v


def contains(big: Subspace, small: Subspace, tables: FqTables) -> bool:
    return all(not any(_reduce(row, big, tables)) for row in small.rows)


def flags(n: int, composition: Sequence[int], q: int) -> Iterator[tuple[Subspace, ...]]:
    """Banderas 0 ⊂ V_1 ⊂ … ⊂ V con dim V_i/V_{i−1} = composition[i]."""
    composition = list(composition)
    if any(part < 1 for part in composition) or sum(composition) != n:
        raise LabelError(f'{composition} no es una composición de {n}')
    dims = [sum(composition[:i + 1]) for i in range(len(composition) - 1)]
    tables = fq_tables(q)

    def _extend(prefix: tuple[Subspace, ...], index: int):
        if index == len(dims):
            yield prefix
            return
        for space in subspaces(n, dims[index], q):
            if not prefix or contains(space, prefix[-1], tables):
                yield from _extend(prefix + (space,), index + 1)

    yield from _extend((), 0)


def is_invariant(g: Matrix, space: Subspace, tables: FqTables) -> bool:
    return all(not any(_reduce(matvec(g, row, space.n, tables), space, tables)) for row in space.rows)


def restrict(g: Matrix, space: Subspace, tables: FqTables) -> tuple[Matrix, Matrix] | None:
    """(g|W, g|V/W) como matrices en las bases de W y de V/W; None si g no deja fijo W."""
    n = space.n
    images = [matvec(g, row, n, tables) for row in space.rows]
    if any(any(_reduce(image, space, tables)) for image in images):
        return None
    k = space.dim
    sub = tuple(images[c][space.pivots[r]] for r in range(k) for c in range(k))
    free = space.complement
    columns = [_reduce(tuple(g[i * n + j] for i in range(n)), space, tables) for j in free]
    quotient = tuple(columns[c][free[r]] for r in range(len(free)) for c in range(len(free)))
    return sub, quotient


# ─── Funciones de clase por fuerza bruta ──────────────────────────────────────

def _group(n: int, q: int, group: OracleGroup | None) -> OracleGroup:
    if group is not None:
        if (group.n, group.q) != (n, q):
            raise LabelError(f'Grupo GL_{group.n}(F_{group.q}) distinto de GL_{n}(F_{q})')
        return group
    return enumerate_group(n, q)


def induce_product(n1: int, n2: int, mu1: ColoredPartition, mu2: ColoredPartition, q: int,
                   group: OracleGroup | None = None) -> ClassFunction:
    """
    Ind_P^G(π_μ1 × π_μ2) con P el parabólico triangular por bloques (n1, n2).

    Las coclases xP corresponden a los subespacios xW_0 de dimensión n1, así que
    el valor en g cuenta los W fijos por g con tipo(g|W) = μ1 y tipo(g|V/W) = μ2.
    """
    if mu1.weight != n1 or mu2.weight != n2:
        raise LabelError(f'Pesos incompatibles: ‖{mu1!r}‖ != {n1} o ‖{mu2!r}‖ != {n2}')
    n = n1 + n2
    group = _group(n, q, group)
    tables = group.tables
    spaces = list(subspaces(n, n1, q))
    result = {}
    for rep, label in zip(group.representatives(), group.class_labels()):
        count = 0
        for space in spaces:
            blocks = restrict(rep, space, tables)
            if blocks is None:
                continue
            sub, quotient = blocks
            if class_type(sub, n1, q) == mu1 and class_type(quotient, n2, q) == mu2:
                count += 1
        result[label] = count
    return result


def permutation_character(n: int, q: int, composition: Sequence[int],
                          group: OracleGroup | None = None) -> ClassFunction:
    """Número de banderas del tipo dado fijas por cada clase."""
    group = _group(n, q, group)
    tables = group.tables
    all_flags = list(flags(n, composition, q))
    return {
        label: sum(all(is_invariant(rep, space, tables) for space in flag) for flag in all_flags)
        for rep, label in zip(group.representatives(), group.class_labels())
    }


def multiplicity(table: CharacterTable, function: ClassFunction, label: ColoredPartition) -> Cyclo:
    """⟨π, χ^λ̃⟩ = |G|^{-1} Σ_μ |c_μ| π(μ) conj(χ^λ̃(μ))."""
    total = table.field.zero
    for mu, size, value in zip(table.classes, table.sizes, table.row(label)):
        total = total + value.conjugate() * (size * function.get(mu, 0))
    return total * Fraction(1, table.order)


# ─── Informes ─────────────────────────────────────────────────────────────────

def _skip_on_bound(report: Report, check: str, n: int, q: int, progress: bool = False) -> OracleGroup | None:
    try:
        return enumerate_group(n, q, progress=progress)
    except ResourceBoundError as exc:
        logger.warning('Oráculo omitido para GL_%s(F_%s): %s', n, q, exc)
        report.skip(check, str(exc))
        return None


def verify_class_data(n: int, q: int, group: OracleGroup | None = None) -> Report:
    report = Report()
    if group is None:
        group = _skip_on_bound(report, 'class_data', n, q)
        if group is None:
            return report
    order = group_order(n, q)
    report.add('group_order', group.order == order, {'brute': group.order, 'formula': order})

    brute = group.class_labels()
    expected = class_labels(n, q)
    missing = [repr(mu) for mu in expected if mu not in brute]
    extra = [repr(mu) for mu in brute if mu not in expected]
    duplicated = len(set(brute)) != len(brute)
    report.add('class_labels', not missing and not extra and not duplicated,
               {'classes': len(brute), 'missing': missing, 'unexpected': extra, 'duplicated': duplicated})

    sizes = [
        {'class': repr(mu), 'brute': len(cls), 'formula': class_size(mu, q)}
        for mu, cls in zip(brute, group.classes)
        if mu in expected and len(cls) != class_size(mu, q)
    ]
    report.add('class_sizes', not sizes, {'violations': sizes})
    identity = centralizer_order(identity_class(n, q)) if n else 1
    report.add('identity_centralizer', identity == order, {'centralizer': identity, 'order': order})
    return report


def verify_induction(n1: int, n2: int, q: int, group: OracleGroup | None = None) -> Report:
    """Inducción por coclases frente al producto del álgebra de Hall coloreada."""
    report = Report()
    check = f'induction_{n1}_{n2}'
    if group is None:
        group = _skip_on_bound(report, check, n1 + n2, q)
        if group is None:
            return report
    violations = []
    for mu1 in class_labels(n1, q):
        for mu2 in class_labels(n2, q):
            brute = induce_product(n1, n2, mu1, mu2, q, group)
            hall = colored_hall_product(mu1, mu2, q)
            for label, value in brute.items():
                if value != hall.get(label, 0):
                    violations.append({'mu1': repr(mu1), 'mu2': repr(mu2), 'class': repr(label),
                                       'brute': value, 'hall': hall.get(label, 0)})
    report.add(check, not violations, {'q': q, 'violations': violations})
    return report


def verify_permutation_character(table: CharacterTable, composition: Sequence[int],
                                 group: OracleGroup | None = None) -> Report:
    """Las multiplicidades del carácter de permutación sobre banderas son enteros >= 0."""
    report = Report()
    check = 'permutation_' + '_'.join(str(part) for part in composition)
    if group is None:
        group = _skip_on_bound(report, check, table.n, table.q)
        if group is None:
            return report
    function = permutation_character(table.n, table.q, composition, group)
    multiplicities, bad = {}, []
    total = 0
    for label, d in zip(table.characters, table.degrees):
        m = multiplicity(table, function, label)
        if not m.is_rational() or m.rational_value().denominator != 1 or m.rational_value() < 0:
            bad.append({'character': repr(label), 'multiplicity': m.to_string()})
            continue
        value = m.rational_value().numerator
        if value:
            multiplicities[repr(label)] = value
        total += value * d
    flag_count = function[identity_class(table.n, table.q)]
    report.add(check, not bad and total == flag_count,
               {'flags': flag_count, 'multiplicities': multiplicities, 'violations': bad})
    return report


def verify_table_classes(table: CharacterTable, group: OracleGroup | None = None) -> Report:
    """El emparejamiento por tipo identifica cada clase bruta con una columna del mismo tamaño."""
    report = Report()
    if group is None:
        group = _skip_on_bound(report, 'table_classes', table.n, table.q)
        if group is None:
            return report
    violations = []
    for cls, label in zip(group.classes, group.class_labels()):
        if label not in table.classes:
            violations.append({'class': repr(label), 'reason': 'sin columna'})
        elif len(cls) != table.sizes[table.class_index(label)]:
            violations.append({'class': repr(label), 'brute': len(cls),
                               'table': table.sizes[table.class_index(label)]})
    report.add('table_classes', not violations, {'violations': violations})
    return report


def verify_brute(table: CharacterTable, progress: bool = False) -> Report:
    """Todo lo que el oráculo puede comprobar sobre una tabla calculada, con un único recorrido del grupo."""
    report = Report()
    group = _skip_on_bound(report, 'oracle', table.n, table.q, progress)
    if group is None:
        return report
    report.extend(verify_class_data(table.n, table.q, group))
    report.extend(verify_table_classes(table, group))
    if table.n >= 2:
        report.extend(verify_permutation_character(table, (1, table.n - 1), group))
        report.extend(verify_induction(1, table.n - 1, table.q, group))
    return report
