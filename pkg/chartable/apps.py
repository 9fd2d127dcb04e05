from django.apps import AppConfig


class ChartableConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'chartable'
