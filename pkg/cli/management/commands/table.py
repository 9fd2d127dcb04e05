"""
Tabla de caracteres completa de GL_n(F_q).

Uso:
  python manage.py table --n 2 --q 2
  python manage.py table --n 3 --q 2 --format json --threads 4 --progress
  python manage.py table --n 2 --q 3 --format json --validate
  python manage.py table --n 4 --q 2 --enqueue
"""
import jsonschema
from django.core.management.base import CommandError

from chartable.serializers import validate_table_json
from cli.base import EXIT_VERIFY, GLCharsCommand
from cli.cache import ResultCache
from cli.formatting import table_rows, table_text
from cli.tasks import build_table, table_data


class Command(GLCharsCommand):
    help = 'Calcula la tabla de caracteres de GL_n(F_q) con aritmética ciclotómica exacta'
    command_name = 'table'

    def add_arguments(self, parser):
        parser.add_argument('--n',         type=int, help='Tamaño de las matrices')
        parser.add_argument('--q',         type=int, help='Orden del cuerpo (potencia de primo)')
        parser.add_argument('--threads',   type=int, help='Hilos para el relleno de la matriz')
        parser.add_argument('--progress',  action='store_true', help='Barra de progreso en stderr')
        parser.add_argument('--enqueue',   action='store_true', help='Calcular en un worker de Celery')
        parser.add_argument('--validate',  action='store_true', help='Validar el JSON contra el esquema')
        parser.add_argument('--cache-dir', dest='cache_dir', help='Directorio de la caché de resultados')
        parser.add_argument('--no-cache',  dest='use_cache', action='store_false', help='No leer ni escribir caché')
        self.add_format_argument(parser)

    def run(self, config, options):
        n, q = config['n'], config['q']
        if options['enqueue']:
            result = build_table.delay(n, q, config['threads'], config['cache_dir'])
            if result.ready():
                self.stdout.write(self.style.SUCCESS(f'Tabla guardada en {result.get()}'))
            else:
                self.stdout.write(f'Tarea {result.id} encolada para GL_{n}(F_{q})')
            return

        cache = ResultCache(config['cache_dir'], enabled=config['use_cache'])
        data = table_data(n, q, config['threads'], cache, progress=options['progress'])
        if options['validate']:
            try:
                validate_table_json(data)
            except jsonschema.ValidationError as exc:
                raise CommandError(f'JSON no válido: {exc.message}', returncode=EXIT_VERIFY)
        self.emit(config, data, pretty=lambda: table_text(data), rows=lambda: table_rows(data))
