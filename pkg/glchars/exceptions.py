"""
Errores de dominio compartidos por todas las apps.

Los comandos de gestión los traducen a códigos de salida:
  LabelError / ConductorError / FieldRealizationError -> 1
  ResourceBoundError                                -> 2
  fallos de verificación                            -> 3
"""


class GLCharsError(Exception):
    """Base de todos los errores del proyecto."""


class ResourceBoundError(GLCharsError):
    """Se ha superado un límite configurado (tamaño de cuerpo, orden de grupo, conductor)."""

    def __init__(self, what: str, value: int, bound: int):
        self.what  = what
        self.value = value
        self.bound = bound
        super().__init__(f'{what} = {value} supera el límite configurado {bound}.')


class LabelError(GLCharsError, ValueError):
    """Partición, órbita o etiqueta mal formada, o pesos incompatibles."""


class ConductorError(GLCharsError, ValueError):
    """Operación entre elementos ciclotómicos de conductores distintos."""


class FieldRealizationError(GLCharsError, ValueError):
    """Polinomio reducible, igual a t, o sin elemento primitivo compatible."""


class InternalConsistencyError(GLCharsError):
    """Una identidad que debe cumplirse exactamente ha fallado."""
