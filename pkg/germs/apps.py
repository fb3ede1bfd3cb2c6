from django.apps import AppConfig


class GermsConfig(AppConfig):
    name = 'germs'
    verbose_name = 'Germ Classifier'
