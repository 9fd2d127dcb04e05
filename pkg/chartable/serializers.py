import jsonschema
from rest_framework import serializers

from combinatorics.partitions import ColoredPartition, Partition
from cyclotomic.serializers import CycloSerializer
from glchars.exceptions import GLCharsError
from orbits.orbits import KINDS
from orbits.serializers import OrbitSerializer, PolynomialOrbitSerializer

from .reports import STATUSES, Report
from .table import CharacterTable


class ColoredPartitionSerializer(serializers.BaseSerializer):
    """
    [{"orbit": …, "partition": [..]}, …]

    La órbita admite tres formas:
      {"kind", "q", "d", "rep"}       completa
      {"d", "rep"}                    con q y kind en el contexto
      {"poly": [c0, c1, …]}           polinomio mínimo (solo órbitas de valores)
    """

    def to_representation(self, instance: ColoredPartition):
        return [
            {'orbit': OrbitSerializer(orbit).data, 'partition': list(lam)}
            for orbit, lam in instance.items()
        ]

    def _orbit(self, raw):
        if not isinstance(raw, dict):
            raise serializers.ValidationError(f'Órbita no válida: {raw!r}')
        q = raw.get('q', self.context.get('q'))
        if 'poly' in raw:
            serializer = PolynomialOrbitSerializer(data={'q': q, 'poly': raw['poly']})
            serializer.is_valid(raise_exception=True)
            return serializer.save()
        data = {'kind': self.context.get('kind'), 'q': q, **raw}
        serializer = OrbitSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def to_internal_value(self, data):
        if not isinstance(data, list):
            raise serializers.ValidationError('Se esperaba una lista de {"orbit", "partition"}.')
        pairs = []
        for entry in data:
            if not isinstance(entry, dict) or set(entry) != {'orbit', 'partition'}:
                raise serializers.ValidationError(f'Entrada no válida: {entry!r}')
            try:
                pairs.append((self._orbit(entry['orbit']), Partition(entry['partition'])))
            except GLCharsError as exc:
                raise serializers.ValidationError(str(exc))
        kinds = {orbit.kind for orbit, _ in pairs}
        expected = self.context.get('kind')
        if expected and kinds - {expected}:
            raise serializers.ValidationError(f'Todas las órbitas deben ser de tipo {expected}.')
        try:
            return ColoredPartition(pairs)
        except GLCharsError as exc:
            raise serializers.ValidationError(str(exc))


class CheckSerializer(serializers.Serializer):
    check    = serializers.CharField()
    status   = serializers.ChoiceField(choices=STATUSES)
    details  = serializers.JSONField()
    advisory = serializers.BooleanField()


class ReportSerializer(serializers.BaseSerializer):

    def to_representation(self, instance: Report):
        return {
            'passed': instance.passed,
            'checks': CheckSerializer(instance.checks, many=True).data,
        }


class CharacterTableSerializer(serializers.BaseSerializer):

    def to_representation(self, instance: CharacterTable):
        return {
            'n':         instance.n,
            'q':         instance.q,
            'conductor': instance.conductor,
            'classes': [
                {'label': ColoredPartitionSerializer(mu).data, 'centralizer': a, 'size': size}
                for mu, a, size in zip(instance.classes, instance.centralizers, instance.sizes)
            ],
            'characters': [
                {'label': ColoredPartitionSerializer(label).data, 'degree': d}
                for label, d in zip(instance.characters, instance.degrees)
            ],
            'values': [[CycloSerializer(v).data for v in row] for row in instance.values],
        }


# ─── Esquema ──────────────────────────────────────────────────────────────────

_ORBIT = {
    'type': 'object',
    'required': ['kind', 'q', 'd', 'rep'],
    'properties': {
        'kind': {'enum': list(KINDS)},
        'q':    {'type': 'integer', 'minimum': 2},
        'd':    {'type': 'integer', 'minimum': 1},
        'rep':  {'type': 'integer', 'minimum': 0},
    },
}

_LABEL = {
    'type': 'array',
    'items': {
        'type': 'object',
        'required': ['orbit', 'partition'],
        'properties': {
            'orbit': _ORBIT,
            'partition': {'type': 'array', 'items': {'type': 'integer', 'minimum': 1}, 'minItems': 1},
        },
    },
}

_CYCLO = {
    'type': 'object',
    'required': ['m', 'coeffs'],
    'properties': {
        'm': {'type': 'integer', 'minimum': 1},
        'coeffs': {
            'type': 'array',
            'items': {'type': 'array', 'items': {'type': 'integer'}, 'minItems': 2, 'maxItems': 2},
        },
    },
}

TABLE_SCHEMA = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['n', 'q', 'conductor', 'classes', 'characters', 'values'],
    'properties': {
        'n':         {'type': 'integer', 'minimum': 0},
        'q':         {'type': 'integer', 'minimum': 2},
        'conductor': {'type': 'integer', 'minimum': 1},
        'classes': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['label', 'centralizer', 'size'],
                'properties': {
                    'label':       _LABEL,
                    'centralizer': {'type': 'integer', 'minimum': 1},
                    'size':        {'type': 'integer', 'minimum': 1},
                },
            },
        },
        'characters': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['label', 'degree'],
                'properties': {'label': _LABEL, 'degree': {'type': 'integer', 'minimum': 1}},
            },
        },
        'values': {'type': 'array', 'items': {'type': 'array', 'items': _CYCLO}},
    },
}


def validate_table_json(data) -> None:
    """Lanza jsonschema.ValidationError si el JSON no sigue el esquema o la matriz no es cuadrada."""
    jsonschema.validate(data, TABLE_SCHEMA)
    size = len(data['classes'])
    if len(data['characters']) != size or any(len(row) != size for row in data['values']):
        raise jsonschema.ValidationError('La matriz de valores no es cuadrada.')


def label_text(label: ColoredPartition) -> str:
    """Etiqueta compacta para salidas de texto: 'f[d=1,rep=0]:1,1 f[d=2,rep=1]:1'."""
    if not label:
        return '∅'
    return ' '.join(f'{orbit!r}:{lam.label()}' for orbit, lam in label.items())

