"""
Particiones, particiones coloreadas y las estadísticas q que consumen el resto de apps.

Los coeficientes `t` pueden ser enteros, Fraction o elementos del cuerpo simbólico
de sympy (`symfunc.coefficients.FunctionField`); todas las funciones usan solo
+, -, *, / y potencias enteras, así que el tipo del resultado sigue al de `t`.

Uso:
  from combinatorics.partitions import Partition, z_t, enumerate_colored
  z_t(Partition((1, 1)), Fraction(1, 2))   # -> Fraction(8, 1)
"""
import math
from collections import Counter
from fractions import Fraction
from threading import RLock
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from cachetools import LRUCache, cached

from glchars.exceptions import LabelError


# ─── Particiones ──────────────────────────────────────────────────────────────

class Partition(tuple):
    """Sucesión débilmente decreciente de enteros positivos (los ceros finales se descartan)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise LabelError(f'Partición con partes no positivas: {parts}')
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise LabelError(f'Las partes deben ser decrecientes: {parts}')
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """'2,1,1' -> (2,1,1); cadena vacía -> ()."""
        text = (text or '').strip()
        if not text:
            return cls()
        try:
            return cls(int(chunk) for chunk in text.split(','))
        except ValueError as exc:
            raise LabelError(f'Partición no válida: "{text}" ({exc})') from exc

    @property
    def weight(self) -> int:
        return sum(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> 'Partition':
        return conjugate(self)

    def merge(self, other: Sequence[int]) -> 'Partition':
        """Unión de partes, la multiplicación de monomios p_λ·p_μ."""
        return Partition(sorted(self + tuple(other), reverse=True))

    def contains(self, other: 'Partition') -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def label(self) -> str:
        return ','.join(str(p) for p in self)

    def __repr__(self):
        return f'Partition({self.label()})'


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def z_stat(lam: Sequence[int]) -> int:
    """z_λ = Π i^{m_i} m_i!"""
    result = 1
    for part, mult in Counter(lam).items():
        result *= part ** mult * math.factorial(mult)
    return result


def _coefficient(t):
    return Fraction(t) if isinstance(t, int) else t


def z_t(lam: Sequence[int], t):
    """z_λ(t) = z_λ · Π (1 − t^{λ_i})^{-1}."""
    t = _coefficient(t)
    den = t ** 0
    for part in lam:
        den *= 1 - t ** part
    if den == 0:
        raise ZeroDivisionError(f'z_t({tuple(lam)}) tiene un polo en t = {t}')
    return z_stat(lam) / den


def n_stat(lam: Sequence[int]) -> int:
    """n(λ) = Σ (i−1) λ_i."""
    return sum(i * part for i, part in enumerate(lam))


def hook_lengths(lam: Sequence[int]) -> list[int]:
    lam = Partition(lam)
    conj = conjugate(lam)
    return sorted(
        (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    )


def q_integer(k: int, t):
    """[k]_t = 1 + t + … + t^{k−1}."""
    t = _coefficient(t)
    return sum((t ** i for i in range(k)), t * 0)


def q_factorial(k: int, t):
    t = _coefficient(t)
    result = t ** 0
    for i in range(1, k + 1):
        result *= q_integer(i, t)
    return result


def b_t(lam: Sequence[int], t):
    """b_λ(t) = (1−t)^{l(λ)} Π_i [m_i(λ)]_t!"""
    t = _coefficient(t)
    result = (1 - t) ** len(lam)
    for mult in Counter(lam).values():
        result *= q_factorial(mult, t)
    return result


def a_q(lam: Sequence[int], q: int) -> int:
    """a_λ(q) = q^{|λ|+2n(λ)} b_λ(q^{-1}), orden del centralizador de la componente primaria."""
    value = Fraction(q) ** (sum(lam) + 2 * n_stat(lam)) * b_t(lam, Fraction(1, q))
    if value.denominator != 1:
        raise ArithmeticError(f'a_q({tuple(lam)}, {q}) no es entero: {value}')
    return value.numerator


def gauss_binomial(m: int, r: int, t):
    """Binomial gaussiano [m, r]_t por la recurrencia q-Pascal; fuera de rango vale 0."""
    t = _coefficient(t)
    if m < 0 or r < 0 or r > m:
        return t * 0
    # row[j] = [i, j]_t
    row = [t ** 0]
    for i in range(1, m + 1):
        new = [t ** 0] * (i + 1)
        for j in range(1, i):
            new[j] = row[j - 1] + t ** j * row[j]
        row = new
    return row[r]


def is_vertical_strip(lam: Partition, mu: Partition, r: int | None = None) -> bool:
    """λ/μ es una franja vertical (como mucho una caja por fila) de tamaño r."""
    if not lam.contains(mu):
        return False
    if r is not None and lam.weight - mu.weight != r:
        return False
    padded = tuple(mu) + (0,) * (len(lam) - len(mu))
    return all(a - b in (0, 1) for a, b in zip(lam, padded))


# ─── Enumeración ──────────────────────────────────────────────────────────────

def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@cached(cache=LRUCache(maxsize=256), lock=RLock())
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """Todas las particiones de n en orden lexicográfico inverso."""
    if n < 0:
        raise LabelError(f'n debe ser >= 0 (recibido {n})')
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from enumerate_partitions(k)


# ─── Particiones coloreadas ───────────────────────────────────────────────────

class ColoredPartition:
    """
    Función λ: colores -> particiones con soporte finito, pesada por el grado de cada color.

    Los colores suelen ser `orbits.orbits.Orbit` (el grado sale de `.degree`);
    para etiquetas genéricas se pasa `degrees`. Los items se guardan ordenados
    por etiqueta, así que igualdad y hash no dependen del orden de entrada.
    """
    __slots__ = ('_items',)

    def __init__(self, assignment=(), degrees: Mapping[Hashable, int] | None = None):
        pairs = assignment.items() if hasattr(assignment, 'items') else assignment
        items = []
        for label, parts in pairs:
            lam = parts if isinstance(parts, Partition) else Partition(parts)
            if not lam:
                continue
            degree = degrees[label] if degrees is not None else label.degree
            if degree < 1:
                raise LabelError(f'El color {label!r} tiene grado {degree} < 1')
            items.append((label, degree, lam))
        items.sort(key=lambda item: item[0])
        for a, b in zip(items, items[1:]):
            if a[0] == b[0]:
                raise LabelError(f'Color repetido: {a[0]!r}')
        self._items = tuple(items)

    @classmethod
    def _from_items(cls, items) -> 'ColoredPartition':
        obj = cls.__new__(cls)
        obj._items = tuple(sorted(items, key=lambda item: item[0]))
        return obj

    # ── acceso ──

    def __getitem__(self, label) -> Partition:
        for key, _, lam in self._items:
            if key == label:
                return lam
        return Partition()

    def items(self) -> Iterator[tuple[Hashable, Partition]]:
        for label, _, lam in self._items:
            yield label, lam

    def triples(self) -> tuple:
        return self._items

    @property
    def support(self) -> tuple:
        return tuple(label for label, _, _ in self._items)

    @property
    def weight(self) -> int:
        """‖λ‖ = Σ d(f)·|λ(f)|"""
        return sum(degree * lam.weight for _, degree, lam in self._items)

    def __iter__(self):
        return iter(self.support)

    def __len__(self):
        return len(self._items)

    def __bool__(self):
        return bool(self._items)

    def __eq__(self, other):
        return isinstance(other, ColoredPartition) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        body = ', '.join(f'{label!r}: {lam.label()}' for label, _, lam in self._items)
        return '{' + body + '}'

    # ── aritmética ──

    def merge(self, other: 'ColoredPartition') -> 'ColoredPartition':
        merged = {label: (degree, lam) for label, degree, lam in self._items}
        for label, degree, lam in other._items:
            if label in merged:
                merged[label] = (degree, merged[label][1].merge(lam))
            else:
                merged[label] = (degree, lam)
        return ColoredPartition._from_items(
            (label, degree, lam) for label, (degree, lam) in merged.items()
        )

    def relabel(self, fn) -> 'ColoredPartition':
        """Aplica fn a cada color; fn debe conservar el grado y ser inyectiva."""
        return ColoredPartition._from_items((fn(label), degree, lam) for label, degree, lam in self._items)


def enumerate_colored(n: int, orbits: Sequence[tuple[Hashable, int]]) -> list[ColoredPartition]:
    """
    Todas las particiones coloreadas de peso pesado n sobre los colores dados.

    Orden: primero por el primer color (peso decreciente, particiones en orden
    lexicográfico inverso), después recursivamente por el resto.
    """
    orbits = list(orbits)
    degrees = {label: degree for label, degree in orbits}
    if any(degree < 1 for degree in degrees.values()):
        raise LabelError('Los grados de los colores deben ser >= 1')

    result: list[ColoredPartition] = []

    def _walk(index: int, remaining: int, chosen: list):
        if remaining == 0:
            result.append(ColoredPartition(chosen, degrees=degrees))
            return
        if index == len(orbits):
            return
        label, degree = orbits[index]
        for size in range(remaining // degree, -1, -1):
            for lam in enumerate_partitions(size):
                _walk(index + 1, remaining - degree * size, chosen + [(label, lam)])

    _walk(0, n, [])
    return result
