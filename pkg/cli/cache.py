"""
Caché en disco de resultados JSON: un fichero por (versión, comando, argumentos).

El nombre es el SHA-256 de la clave canónica; la escritura va a un temporal en
el mismo directorio y se publica con os.replace.
"""
import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from django.conf import settings

from glchars import __version__

logger = logging.getLogger(__name__)


class ResultCache:

    def __init__(self, directory: str | os.PathLike | None = None, enabled: bool = True):
        self.directory = Path(directory or settings.GLCHARS_CACHE_DIR)
        self.enabled   = enabled

    @staticmethod
    def key(command: str, args: dict) -> str:
        canonical = json.dumps({'version': __version__, 'command': command, 'args': args},
                               sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode()).hexdigest()

    def path(self, key: str) -> Path:
        return self.directory / f'{key}.json'

    def get(self, key: str):
        if not self.enabled:
            return None
        path = self.path(key)
        try:
            with path.open(encoding='utf-8') as fh:
                data = json.load(fh)
        except FileNotFoundError:
            logger.info('Caché: fallo %s', key[:12])
            return None
        except json.JSONDecodeError:
            logger.warning('Caché: fichero corrupto %s, se recalcula', path)
            return None
        logger.info('Caché: acierto %s', key[:12])
        return data

    def put(self, key: str, data) -> Path:
        path = self.path(key)
        if not self.enabled:
            return path
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix='.tmp')
        try:
            with os.fdopen(fd, 'w', encoding='utf-8') as fh:
                json.dump(data, fh, ensure_ascii=False, separators=(',', ':'))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        logger.debug('Caché: guardado %s', path)
        return path

    def fetch(self, command: str, args: dict, compute):
        """Devuelve el resultado cacheado o lo calcula con compute() y lo guarda."""
        key = self.key(command, args)
        data = self.get(key)
        if data is None:
            data = compute()
            self.put(key, data)
        return data
