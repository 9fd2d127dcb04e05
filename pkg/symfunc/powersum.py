"""
Polinomios en los generadores p_k, de un color o coloreados por órbitas.

La clave de cada monomio es una `Partition` (p_λ = Π p_{λ_i}) o una
`ColoredPartition` (p_ρ̃ = Π_f p_{ρ(f)}(f)); el producto de monomios es la
unión de partes (`merge`). Los coeficientes viven en un cuerpo intercambiable
(`symfunc.coefficients`, `cyclotomic.cyclo.CyclotomicField`).
"""
from combinatorics.partitions import ColoredPartition, Partition


class _GradedPoly:
    __slots__ = ('field', 'terms')
    _unit = None

    def __init__(self, field, terms=None):
        self.field = field
        clean = {}
        for key, coeff in (terms or {}).items():
            if not field.is_zero(coeff):
                clean[key] = coeff
        self.terms = clean

    # ── construcción ──

    @classmethod
    def monomial(cls, field, key, coeff=None):
        return cls(field, {key: field.one if coeff is None else field.convert(coeff)})

    @classmethod
    def one(cls, field):
        return cls.monomial(field, cls._unit)

    @classmethod
    def zero(cls, field):
        return cls(field)

    def _new(self, terms):
        return type(self)(self.field, terms)

    def _check(self, other):
        if self.field.key != other.field.key:
            raise ValueError(f'Cuerpos de coeficientes distintos: {self.field!r} y {other.field!r}')

    # ── aritmética ──

    def __add__(self, other):
        if not isinstance(other, _GradedPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return self._new(terms)

    def __neg__(self):
        return self._new({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, _GradedPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor):
        if factor == 0:
            return self._new({})
        return self._new({key: coeff * factor for key, coeff in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, _GradedPoly):
            return self.scale(other)
        self._check(other)
        terms = {}
        for key_a, coeff_a in self.terms.items():
            for key_b, coeff_b in other.terms.items():
                key = key_a.merge(key_b)
                value = coeff_a * coeff_b
                terms[key] = terms[key] + value if key in terms else value
        return self._new(terms)

    __rmul__ = scale

    def __pow__(self, exponent: int):
        result = self.one(self.field)
        for _ in range(exponent):
            result = result * self
        return result

    # ── consultas ──

    def coefficient(self, key):
        return self.terms.get(key, self.field.zero)

    def items(self):
        return self.terms.items()

    def degrees(self) -> set[int]:
        return {key.weight for key in self.terms}

    def map_coefficients(self, fn, field):
        """Cambia de cuerpo aplicando fn a cada coeficiente."""
        return type(self)(field, {key: fn(coeff) for key, coeff in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, _GradedPoly):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) - other.coefficient(k) == 0 for k in keys)

    __hash__ = None


class PowerSumPoly(_GradedPoly):
    """Σ c_λ p_λ en un solo color."""
    __slots__ = ()
    _unit = Partition()

    def to_string(self) -> str:
        if not self.terms:
            return '0'
        ordered = sorted(self.terms.items(), key=lambda item: (item[0].weight, item[0]))
        return ' + '.join(f'({coeff})*p[{key.label()}]' for key, coeff in ordered)

    __str__ = to_string

    def __repr__(self):
        return f'PowerSumPoly({self.to_string()})'


class MultiColorPoly(_GradedPoly):
    """Σ c_ρ̃ p_ρ̃ con ρ̃ particiones coloreadas; el grado es el peso pesado ‖ρ̃‖."""
    __slots__ = ()
    _unit = ColoredPartition()

    @classmethod
    def from_color(cls, poly: PowerSumPoly, label, degree: int):
        """Lleva un polinomio de un color al color `label` (de grado `degree`)."""
        terms = {}
        for lam, coeff in poly.items():
            key = ColoredPartition([(label, lam)], degrees={label: degree})
            terms[key] = coeff
        return cls(poly.field, terms)

    def to_string(self) -> str:
        if not self.terms:
            return '0'
        ordered = sorted(self.terms.items(), key=lambda item: (item[0].weight, repr(item[0])))
        return ' + '.join(f'({coeff})*p{key!r}' for key, coeff in ordered)

    __str__ = to_string

    def __repr__(self):
        return f'MultiColorPoly({self.to_string()})'
