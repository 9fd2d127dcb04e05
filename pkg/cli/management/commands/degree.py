"""
Grado de un carácter irreducible a partir de su etiqueta.

Uso:
  python manage.py degree --q 2 --char '[{"orbit": {"kind": "character", "q": 2, "d": 1, "rep": 0}, "partition": [1, 1]}]'
  python manage.py degree --q 3 --char '[{"orbit": {"d": 2, "rep": 1}, "partition": [1]}]' --n 2
"""
from chartable.serializers import ColoredPartitionSerializer, label_text
from chartable.table import degree
from cli.base import GLCharsCommand


class Command(GLCharsCommand):
    help = 'Grado d(λ̃) de un carácter de GL_n(F_q)'
    command_name = 'degree'

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int)
        parser.add_argument('--char', help='Etiqueta JSON del carácter (Φ*-partición)')
        parser.add_argument('--n', type=int, help='Peso esperado de la etiqueta')
        self.add_format_argument(parser)

    def run(self, config, options):
        label, q = config['char'], config['q']
        value = degree(label, q)
        data = {'q': q, 'n': label.weight, 'char': ColoredPartitionSerializer(label).data, 'degree': value}
        self.emit(
            config, data,
            pretty=lambda: str(value),
            rows=lambda: [['char', 'degree'], [label_text(label), value]],
        )
