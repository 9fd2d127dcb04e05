from django.apps import AppConfig


class SymfuncConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'symfunc'
