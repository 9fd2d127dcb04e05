import logging

from celery import shared_task

from chartable.serializers import CharacterTableSerializer
from chartable.table import full_table

from .cache import ResultCache

logger = logging.getLogger(__name__)


def table_data(n: int, q: int, threads: int = 1, cache: ResultCache | None = None, progress: bool = False) -> dict:
    """JSON de la tabla de GL_n(F_q), desde la caché si ya está calculada."""
    cache = cache or ResultCache()
    return cache.fetch(
        'table', {'n': n, 'q': q},
        lambda: CharacterTableSerializer(full_table(n, q, threads=threads, progress=progress)).data,
    )


@shared_task(bind=True, acks_late=True)
def build_table(self, n: int, q: int, threads: int = 1, cache_dir: str | None = None) -> str:
    """Calcula la tabla en un worker y devuelve la ruta del fichero de caché."""
    cache = ResultCache(cache_dir)
    logger.info('Tarea %s: GL_%s(F_%s)', self.request.id, n, q)
    table_data(n, q, threads, cache)
    return str(cache.path(cache.key('table', {'n': n, 'q': q})))
