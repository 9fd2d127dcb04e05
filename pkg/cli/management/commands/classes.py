"""
Clases de conjugación de GL_n(F_q) con centralizadores y tamaños.

Uso:
  python manage.py classes --n 2 --q 3
"""
from chartable.serializers import ColoredPartitionSerializer
from chartable.table import centralizer_order, class_labels, group_order
from cli.base import GLCharsCommand
from cli.formatting import columns
from orbits.fields import orbit_label_polynomials
from orbits.orbits import VALUE, enumerate_orbits


class Command(GLCharsCommand):
    help = 'Lista las clases de conjugación de GL_n(F_q)'
    command_name = 'classes'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int)
        parser.add_argument('--q', type=int)
        self.add_format_argument(parser)

    def run(self, config, options):
        n, q = config['n'], config['q']
        order = group_order(n, q)
        names = orbit_label_polynomials(enumerate_orbits(q, n, VALUE))
        entries = []
        for mu in class_labels(n, q):
            a = centralizer_order(mu)
            entries.append((mu, a, order // a))

        def text(mu):
            return ' '.join(f'({names[f]})^[{lam.label()}]' for f, lam in mu.items()) or '∅'

        data = [
            {'label': ColoredPartitionSerializer(mu).data, 'centralizer': a, 'size': size}
            for mu, a, size in entries
        ]
        rows = [['class', 'centralizer', 'size']] + [[text(mu), a, size] for mu, a, size in entries]
        self.emit(
            config, data,
            pretty=lambda: f'GL_{n}(F_{q}): {len(entries)} clases, orden {order}\n\n{columns(rows)}',
            rows=lambda: rows,
        )
