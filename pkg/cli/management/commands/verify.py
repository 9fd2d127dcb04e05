"""
Verifica la tabla de GL_n(F_q): ortogonalidad, grados, integralidad y,
opcionalmente, la fórmula cerrada y el oráculo por fuerza bruta.

Uso:
  python manage.py verify --n 3 --q 2
  python manage.py verify --n 2 --q 3 --paths --format json
  python manage.py verify --n 2 --q 2 --brute
"""
import logging

from django.core.management.base import CommandError

from chartable.reports import SKIPPED
from chartable.serializers import ReportSerializer
from chartable.table import GENERAL, PRINTED, compare_paths, full_table, verify_table
from cli.base import EXIT_VERIFY, GLCharsCommand
from cli.formatting import columns
from oracle.checks import verify_brute

logger = logging.getLogger(__name__)


class Command(GLCharsCommand):
    help = 'Comprueba las identidades de la tabla de caracteres; sale con 3 si alguna falla'
    command_name = 'verify'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int)
        parser.add_argument('--q', type=int)
        parser.add_argument('--threads', type=int)
        parser.add_argument('--paths', action='store_true',
                            help='Compara con la fórmula cerrada; las divergencias de printed son informativas')
        parser.add_argument('--brute', action='store_true', help='Añade las comprobaciones del oráculo')
        parser.add_argument('--progress', action='store_true', help='Barras de progreso en stderr')
        self.add_format_argument(parser)

    def run(self, config, options):
        n, q = config['n'], config['q']
        table = full_table(n, q, threads=config['threads'], progress=options['progress'])
        report = verify_table(table)
        if options['paths']:
            report.extend(compare_paths(table, GENERAL))
            report.extend(compare_paths(table, PRINTED, advisory=True))
        if options['brute']:
            report.extend(verify_brute(table, progress=options['progress']))

        data = ReportSerializer(report).data
        rows = [['check', 'status', 'advisory']] + [[c.check, c.status, c.advisory] for c in report]

        def text():
            skipped = sum(1 for c in report if c.status == SKIPPED)
            summary = 'OK' if report.passed else f'{len(report.failures)} fallos'
            return (f'GL_{n}(F_{q}): {summary} ({len(report)} comprobaciones, {skipped} omitidas, '
                    f'{len(report.findings)} divergencias informativas)\n\n{columns(rows)}')

        self.emit(config, data, pretty=text, rows=lambda: rows)
        if not report.passed:
            names = ', '.join(c.check for c in report.failures)
            logger.error('Verificación fallida para GL_%s(F_%s): %s', n, q, names)
            raise CommandError(f'Comprobaciones fallidas: {names}', returncode=EXIT_VERIFY)
