"""
Polinomios de Green X^λ_ρ(t), impresos de menor a mayor grado.

Uso:
  python manage.py green --lambda 1,1 --rho 2        # -1 + t
  python manage.py green --lambda 3                  # toda la fila
"""
from cli.base import GLCharsCommand
from cli.cache import ResultCache
from combinatorics.partitions import Partition
from symfunc.green import green_row, to_string


class Command(GLCharsCommand):
    help = 'Polinomio de Green X^λ_ρ(t) (o la fila completa si se omite --rho)'
    command_name = 'green'

    def add_arguments(self, parser):
        parser.add_argument('--lambda',    dest='lam', help='Partición λ, ej: 2,1')
        parser.add_argument('--rho',       help='Partición ρ con |ρ| = |λ|')
        parser.add_argument('--cache-dir', dest='cache_dir')
        parser.add_argument('--no-cache',  dest='use_cache', action='store_false')
        self.add_format_argument(parser)

    def run(self, config, options):
        lam = config['lam']
        cache = ResultCache(config['cache_dir'], enabled=config['use_cache'])
        row = cache.fetch(
            'green', {'lambda': list(lam)},
            lambda: [{'rho': list(rho), 'coeffs': list(coeffs)} for rho, coeffs in green_row(lam).items()],
        )
        if 'rho' in config:
            entry = next(e for e in row if Partition(e['rho']) == config['rho'])
            data = {'lambda': list(lam), 'rho': entry['rho'], 'coeffs': entry['coeffs']}
            self.emit(
                config, data,
                pretty=lambda: to_string(entry['coeffs']),
                rows=lambda: [['lambda', 'rho', 'coeffs'], [lam.label(), config['rho'].label(), to_string(entry['coeffs'])]],
            )
            return

        data = {'lambda': list(lam), 'row': row}
        self.emit(
            config, data,
            pretty=lambda: '\n'.join(f'ρ={Partition(e["rho"]).label()}: {to_string(e["coeffs"])}' for e in row),
            rows=lambda: [['lambda', 'rho', 'coeffs']]
                         + [[lam.label(), Partition(e['rho']).label(), to_string(e['coeffs'])] for e in row],
        )
