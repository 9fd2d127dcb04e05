from django.conf import settings
from rest_framework import serializers

from chartable.serializers import ColoredPartitionSerializer
from chartable.table import MATCHINGS
from combinatorics.partitions import Partition
from glchars.exceptions import GLCharsError
from orbits.orbits import CHARACTER, KINDS, VALUE, check_prime_power

COMMANDS = ('table', 'green', 'hall', 'classes', 'orbits', 'degree', 'verify', 'charvalue')
FORMATS  = ('pretty', 'json', 'csv')
MATRIX   = 'matrix'
PATHS    = (MATRIX,) + MATCHINGS

# argumentos obligatorios por comando
REQUIRED = {
    'table':     ('n', 'q'),
    'green':     ('lam',),
    'hall':      ('lam', 'mu', 'nu', 'q'),
    'classes':   ('n', 'q'),
    'orbits':    ('q', 'd'),
    'degree':    ('q', 'char'),
    'verify':    ('n', 'q'),
    'charvalue': ('q', 'char', 'cls'),
}

FLAGS = {'lam': '--lambda', 'char': '--char', 'cls': '--cls'}


class JobConfigSerializer(serializers.Serializer):
    """Valida y convierte los argumentos de un comando antes de ejecutarlo."""
    command   = serializers.ChoiceField(choices=COMMANDS)
    n         = serializers.IntegerField(min_value=0, required=False)
    q         = serializers.IntegerField(min_value=2, required=False)
    d         = serializers.IntegerField(min_value=1, required=False)
    kind      = serializers.ChoiceField(choices=KINDS, default=VALUE)
    lam       = serializers.CharField(required=False, allow_blank=True)
    mu        = serializers.CharField(required=False, allow_blank=True)
    nu        = serializers.CharField(required=False, allow_blank=True)
    rho       = serializers.CharField(required=False, allow_blank=True)
    char      = serializers.JSONField(binary=True, required=False)
    cls       = serializers.JSONField(binary=True, required=False)
    path      = serializers.ChoiceField(choices=PATHS, default=MATRIX)
    format    = serializers.ChoiceField(choices=FORMATS, default='pretty')
    threads   = serializers.IntegerField(min_value=1, required=False)
    cache_dir = serializers.CharField(required=False)
    use_cache = serializers.BooleanField(default=True)

    def _partition(self, value):
        try:
            return Partition.parse(value)
        except GLCharsError as exc:
            raise serializers.ValidationError(str(exc))

    validate_lam = validate_mu = validate_nu = validate_rho = _partition

    def validate_q(self, value):
        try:
            check_prime_power(value)
        except GLCharsError as exc:
            raise serializers.ValidationError(str(exc))
        return value

    def _label(self, raw, q, kind, name):
        serializer = ColoredPartitionSerializer(data=raw, context={'q': q, 'kind': kind})
        if not serializer.is_valid():
            raise serializers.ValidationError({name: serializer.errors})
        return serializer.validated_data

    def validate(self, data):
        command = data['command']
        missing = [FLAGS.get(name, f'--{name}') for name in REQUIRED[command] if name not in data]
        if missing:
            raise serializers.ValidationError(f'{command} necesita {", ".join(missing)}')

        data.setdefault('threads', settings.GLCHARS_THREADS)
        data.setdefault('cache_dir', settings.GLCHARS_CACHE_DIR)
        data['bounds'] = {
            'max_field_size':       settings.GLCHARS_MAX_FIELD_SIZE,
            'max_group_order':      settings.GLCHARS_MAX_GROUP_ORDER,
            'max_conductor_degree': settings.GLCHARS_MAX_CONDUCTOR_DEGREE,
        }

        if 'char' in data:
            data['char'] = self._label(data['char'], data.get('q'), CHARACTER, 'char')
        if 'cls' in data:
            data['cls'] = self._label(data['cls'], data.get('q'), VALUE, 'cls')

        if command == 'green' and 'rho' in data and data['rho'].weight != data['lam'].weight:
            raise serializers.ValidationError(
                f'|λ| = {data["lam"].weight} y |ρ| = {data["rho"].weight} deben coincidir'
            )
        if command in ('degree', 'charvalue') and 'n' in data and data['char'].weight != data['n']:
            raise serializers.ValidationError(f'‖char‖ = {data["char"].weight} no coincide con --n {data["n"]}')
        if command == 'charvalue' and data['char'].weight != data['cls'].weight:
            raise serializers.ValidationError(
                f'‖char‖ = {data["char"].weight} y ‖cls‖ = {data["cls"].weight} deben coincidir'
            )
        return data
