from __future__ import absolute_import, unicode_literals
import os
from celery import Celery

# Establece el módulo de configuración para Celery
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'glchars.settings')

app = Celery('glchars')

# Configuración de Celery para usar los ajustes de Django
app.config_from_object('django.conf:settings', namespace='CELERY')

# Tablas grandes (GL_4) tardan minutos: una tarea por worker y confirmación tardía
app.conf.update(
    broker_connection_retry_on_startup=True,
    task_acks_late=True,
    worker_prefetch_multiplier=1,
    result_expires=24 * 3600,
)

# Habilitar la autodetección de tareas
app.autodiscover_tasks()

#worker: celery -A glchars worker --loglevel=info --pool=threads --concurrency=2
#verificar tareas registradas - celery -A glchars inspect registered
