"""
F-órbitas de grado d: clases ciclotómicas de exponentes módulo q^d − 1.

Uso:
  python manage.py orbits --q 2 --d 2
  python manage.py orbits --q 3 --d 2 --kind character --format json
"""
from cli.base import GLCharsCommand
from cli.formatting import columns
from orbits.fields import min_poly, poly_coeffs, poly_to_string
from orbits.orbits import KINDS, VALUE, orbits_of_degree
from orbits.serializers import OrbitSerializer


class Command(GLCharsCommand):
    help = 'Lista las órbitas de Frobenius de grado exactamente d'
    command_name = 'orbits'

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int)
        parser.add_argument('--d', type=int)
        parser.add_argument('--kind', choices=KINDS, default=VALUE)
        self.add_format_argument(parser)

    def run(self, config, options):
        q, d, kind = config['q'], config['d'], config['kind']
        data, rows = [], [['rep', 'coset'] + (['polynomial'] if kind == VALUE else [])]
        for orbit in orbits_of_degree(q, d, kind):
            entry = dict(OrbitSerializer(orbit).data)
            entry['coset'] = list(orbit.coset())
            row = [orbit.rep, ' '.join(map(str, entry['coset']))]
            if kind == VALUE:
                poly = min_poly(orbit)
                entry['poly'] = poly_coeffs(poly)
                row.append(poly_to_string(poly))
            data.append(entry)
            rows.append(row)

        self.emit(
            config, data,
            pretty=lambda: f'q={q}, d={d}: {len(data)} órbitas\n\n{columns(rows)}',
            rows=lambda: rows,
        )
