"""
Base común de los comandos de gestión.

Códigos de salida:
  0  correcto
  1  uso (argumentos, etiquetas o pesos no válidos)
  2  límite de recursos superado
  3  fallo de verificación
"""
import csv
import io
import logging
import sys

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from glchars.exceptions import GLCharsError, InternalConsistencyError, ResourceBoundError

from .serializers import JobConfigSerializer

logger = logging.getLogger(__name__)

EXIT_USAGE  = 1
EXIT_BOUNDS = 2
EXIT_VERIFY = 3


def _flatten(errors, prefix='') -> list[str]:
    if isinstance(errors, dict):
        out = []
        for key, value in errors.items():
            label = '' if key == 'non_field_errors' else f'{prefix}{key}: '
            out.extend(_flatten(value, label))
        return out
    if isinstance(errors, list):
        return [line for item in errors for line in _flatten(item, prefix)]
    return [f'{prefix}{errors}']


class GLCharsCommand(BaseCommand):
    """Valida con JobConfigSerializer, ejecuta `run` y traduce los errores de dominio a códigos de salida."""
    command_name = None

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)

        def error(message):
            if getattr(self, '_called_from_command_line', False):
                parser.print_usage(sys.stderr)
                parser.exit(EXIT_USAGE, f'{parser.prog}: error: {message}\n')
            raise CommandError(f'Error: {message}', returncode=EXIT_USAGE)

        parser.error = error
        return parser

    def add_format_argument(self, parser):
        parser.add_argument('--format', choices=('pretty', 'json', 'csv'), default='pretty',
                            help='Formato de salida (default pretty)')

    # ── validación ──

    def config(self, options: dict) -> dict:
        data = {'command': self.command_name}
        for key, value in options.items():
            if key in JobConfigSerializer().fields and value is not None:
                data[key] = value
        serializer = JobConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError('; '.join(_flatten(serializer.errors)), returncode=EXIT_USAGE)
        return serializer.validated_data

    def handle(self, *args, **options):
        config = self.config(options)
        try:
            self.run(config, options)
        except ResourceBoundError as exc:
            raise CommandError(str(exc), returncode=EXIT_BOUNDS)
        except InternalConsistencyError as exc:
            logger.error('Identidad violada: %s', exc)
            raise CommandError(str(exc), returncode=EXIT_VERIFY)
        except (GLCharsError, ZeroDivisionError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

    def run(self, config: dict, options: dict):
        raise NotImplementedError

    # ── salida ──

    def emit(self, config: dict, data, pretty=None, rows=None):
        """
        Escribe `data` en el formato pedido.

        pretty: callable que devuelve el texto legible; rows: callable que devuelve filas CSV.
        """
        fmt = config['format']
        if fmt == 'json':
            self.stdout.write(JSONRenderer().render(data).decode('utf-8'))
        elif fmt == 'csv':
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator='\n')
            writer.writerows(rows() if rows else [[data]])
            self.stdout.write(buffer.getvalue(), ending='')
        else:
            self.stdout.write(pretty() if pretty else str(data))
