"""
Valor de un carácter irreducible en una clase de conjugación.

Uso:
  python manage.py charvalue --q 2 --char '[{"orbit": {"d": 1, "rep": 0}, "partition": [2]}]' \
                             --cls '[{"orbit": {"d": 1, "rep": 0}, "partition": [1, 1]}]'
  python manage.py charvalue --q 3 --char '...' --cls '...' --path general
"""
from chartable.serializers import ColoredPartitionSerializer, label_text
from chartable.table import character_value, character_value_formula, working_field
from cli.base import GLCharsCommand
from cli.serializers import MATRIX, PATHS
from cyclotomic.serializers import CycloSerializer


class Command(GLCharsCommand):
    help = 'χ^λ̃(μ̃) por el coeficiente matricial o por la fórmula cerrada'
    command_name = 'charvalue'

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int)
        parser.add_argument('--char', help='Etiqueta JSON del carácter (Φ*-partición)')
        parser.add_argument('--cls', help='Etiqueta JSON de la clase (Φ-partición)')
        parser.add_argument('--n', type=int)
        parser.add_argument('--path', choices=PATHS, default=MATRIX,
                            help='matrix (por defecto), printed o general')
        self.add_format_argument(parser)

    def run(self, config, options):
        label, mu, q, path = config['char'], config['cls'], config['q'], config['path']
        field = working_field(label.weight, q)
        if path == MATRIX:
            value = character_value(label, mu, field)
        else:
            value = character_value_formula(label, mu, path, field)
        data = {
            'q': q,
            'n': label.weight,
            'path': path,
            'char': ColoredPartitionSerializer(label).data,
            'cls': ColoredPartitionSerializer(mu).data,
            'value': CycloSerializer(value).data,
        }
        self.emit(
            config, data,
            pretty=lambda: value.to_string(),
            rows=lambda: [['char', 'cls', 'path', 'value'],
                          [label_text(label), label_text(mu), path, value.to_string()]],
        )
