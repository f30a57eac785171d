"""
Módulo de excepciones del verificador de complejidad tórica
Una excepción por módulo de dominio, todas bajo ErrorTorico
"""


class ErrorTorico(Exception):
    """Error base de todos los módulos de geometría tórica"""


class ErrorRed(ErrorTorico):
    """Vector cero, vector no primitivo o cono degenerado"""


class ErrorAbanico(ErrorTorico):
    """Abanico inválido, rayo repetido o contracción imposible"""


class ErrorDivisor(ErrorTorico):
    """Divisores en abanicos distintos o divisor b-nef inválido"""


class ErrorPar(ErrorTorico):
    """Par generalizado inválido o adjunción sin coeficiente 1"""


class ErrorComplejidad(ErrorTorico):
    """Descomposición que viola las cotas o fixture desconocido"""


class ErrorLP(ErrorTorico):
    """Programa lineal mal formado"""


class ErrorMmp(ErrorTorico):
    """Precondición de un paso del programa de modelos mínimos violada"""


class ErrorVerificacion(ErrorTorico):
    """Identificador de caso desconocido o parámetros fuera de rango"""


class ErrorFormato(ErrorTorico):
    """
    Entrada JSON inválida.
    Si el error viene de la sintaxis JSON, guarda línea y columna.
    """

    def __init__(self, mensaje, linea=None, columna=None):
        super().__init__(mensaje)
        self.linea = linea
        self.columna = columna

    def __str__(self):
        mensaje = super().__str__()
        if self.linea is not None:
            return f"{mensaje} (línea {self.linea}, columna {self.columna})"
        return mensaje
