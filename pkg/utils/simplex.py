"""
Módulo de programación lineal exacta
Simplex de dos fases sobre Fraction con la regla de Bland y
certificado de Farkas cuando el sistema es infactible
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from utils.errores import ErrorLP

logger = logging.getLogger(__name__)

OPTIMO = "optimo"
INFACTIBLE = "infactible"
NO_ACOTADO = "no_acotado"


@dataclass
class ResultadoLP:
    """Resultado de resolver_lp; x y certificado son listas de Fraction"""
    estado: str
    valor: Fraction = None
    x: list = field(default_factory=list)
    certificado: list = None
    base: list = field(default_factory=list)

    @property
    def es_optimo(self):
        return self.estado == OPTIMO

    @property
    def es_factible(self):
        return self.estado != INFACTIBLE


def _validar_filas(filas, n, nombre):
    for fila in filas:
        if len(fila) != n:
            raise ErrorLP(f"Fila de {nombre} con {len(fila)} entradas; se esperaban {n}")


def _pivotear(tabla, rhs, base, i, j):
    piv = tabla[i][j]
    tabla[i] = [a / piv for a in tabla[i]]
    rhs[i] = rhs[i] / piv
    for k in range(len(tabla)):
        if k != i and tabla[k][j] != 0:
            f = tabla[k][j]
            tabla[k] = [a - f * b for a, b in zip(tabla[k], tabla[i])]
            rhs[k] = rhs[k] - f * rhs[i]
    base[i] = j


def _costos_reducidos(tabla, base, costos, columnas):
    return {
        j: costos[j] - sum((costos[base[i]] * tabla[i][j] for i in range(len(tabla))), Fraction(0))
        for j in columnas
    }


def _bland(tabla, rhs, base, costos, columnas):
    """Minimiza costos sobre las columnas permitidas. Devuelve OPTIMO o NO_ACOTADO"""
    iteraciones = 0
    while True:
        reducidos = _costos_reducidos(tabla, base, costos, columnas)
        entrantes = [j for j in sorted(columnas) if reducidos[j] < 0 and j not in base]
        if not entrantes:
            return OPTIMO
        j = entrantes[0]
        candidatos = [
            (rhs[i] / tabla[i][j], base[i], i)
            for i in range(len(tabla)) if tabla[i][j] > 0
        ]
        if not candidatos:
            return NO_ACOTADO
        _, _, i = min(candidatos)
        _pivotear(tabla, rhs, base, i, j)
        iteraciones += 1
        logger.debug("Pivote %s: entra columna %s en fila %s", iteraciones, j, i)


def resolver_lp(c, filas_le=(), b_le=(), filas_eq=(), b_eq=(), maximizar=True):
    """
    Resuelve max (o min) c.x sujeto a filas_le x <= b_le, filas_eq x = b_eq, x >= 0.

    Args:
        c: Coeficientes de la función objetivo
        filas_le, b_le: Restricciones de desigualdad
        filas_eq, b_eq: Restricciones de igualdad
        maximizar: True para maximizar

    Returns:
        ResultadoLP: Estado, valor óptimo, vértice x y certificado de Farkas si es infactible
    """
    c = [Fraction(v) for v in c]
    n = len(c)
    filas_le = [[Fraction(a) for a in fila] for fila in filas_le]
    filas_eq = [[Fraction(a) for a in fila] for fila in filas_eq]
    b_le = [Fraction(v) for v in b_le]
    b_eq = [Fraction(v) for v in b_eq]
    if len(filas_le) != len(b_le) or len(filas_eq) != len(b_eq):
        raise ErrorLP("Cantidad de filas y de términos independientes distinta")
    _validar_filas(filas_le, n, "desigualdad")
    _validar_filas(filas_eq, n, "igualdad")

    m_le, m_eq = len(filas_le), len(filas_eq)
    m = m_le + m_eq
    # columnas: variables | holguras | artificiales
    total = n + m_le + m
    tabla, rhs, signos = [], [], []
    for r in range(m):
        if r < m_le:
            fila = filas_le[r] + [Fraction(1 if k == r else 0) for k in range(m_le)]
            b = b_le[r]
        else:
            fila = filas_eq[r - m_le] + [Fraction(0)] * m_le
            b = b_eq[r - m_le]
        signo = -1 if b < 0 else 1
        fila = [signo * a for a in fila] + [Fraction(1 if k == r else 0) for k in range(m)]
        tabla.append(fila)
        rhs.append(signo * b)
        signos.append(signo)
    base = [n + m_le + r for r in range(m)]
    artificiales = set(base)

    # Fase 1
    costos1 = [Fraction(0)] * (n + m_le) + [Fraction(1)] * m
    _bland(tabla, rhs, base, costos1, list(range(total)))
    inviabilidad = sum((rhs[i] for i in range(m) if base[i] in artificiales), Fraction(0))
    if inviabilidad > 0:
        # y = c_B B^-1 leído en las columnas artificiales
        y = [
            sum((costos1[base[i]] * tabla[i][n + m_le + k] for i in range(m)), Fraction(0))
            for k in range(m)
        ]
        certificado = [signos[k] * y[k] for k in range(m)]
        logger.debug("LP infactible; certificado %s", certificado)
        return ResultadoLP(estado=INFACTIBLE, certificado=certificado)

    # sacar artificiales de la base en nivel cero
    filas_vivas = []
    for i in range(m):
        if base[i] in artificiales:
            j = next((j for j in range(n + m_le) if tabla[i][j] != 0), None)
            if j is None:
                continue
            _pivotear(tabla, rhs, base, i, j)
        filas_vivas.append(i)
    tabla = [tabla[i] for i in filas_vivas]
    rhs = [rhs[i] for i in filas_vivas]
    base = [base[i] for i in filas_vivas]

    # Fase 2
    signo_objetivo = -1 if maximizar else 1
    costos2 = [signo_objetivo * v for v in c] + [Fraction(0)] * (m_le + m)
    estado = _bland(tabla, rhs, base, costos2, list(range(n + m_le)))
    if estado == NO_ACOTADO:
        return ResultadoLP(estado=NO_ACOTADO)

    x = [Fraction(0)] * n
    for i, j in enumerate(base):
        if j < n:
            x[j] = rhs[i]
    valor = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return ResultadoLP(estado=OPTIMO, valor=valor, x=x, base=sorted(j for j in base if j < n))


def verificar_certificado(certificado, filas_le=(), b_le=(), filas_eq=(), b_eq=()):
    """
    Comprueba un certificado de Farkas y: y^T A <= 0 en cada variable,
    y <= 0 en las filas de desigualdad e y^T b > 0.
    """
    if certificado is None:
        return False
    filas = [list(f) for f in filas_le] + [list(f) for f in filas_eq]
    b = list(b_le) + list(b_eq)
    if len(certificado) != len(filas):
        return False
    if any(y > 0 for y in certificado[:len(filas_le)]):
        return False
    n = len(filas[0]) if filas else 0
    for j in range(n):
        if sum((y * Fraction(fila[j]) for y, fila in zip(certificado, filas)), Fraction(0)) > 0:
            return False
    return sum((y * Fraction(bi) for y, bi in zip(certificado, b)), Fraction(0)) > 0


def verificar_solucion(x, filas_le=(), b_le=(), filas_eq=(), b_eq=()):
    """Sustituye x en todas las restricciones y comprueba x >= 0"""
    if any(v < 0 for v in x):
        return False
    for fila, b in zip(filas_le, b_le):
        if sum((Fraction(a) * v for a, v in zip(fila, x)), Fraction(0)) > b:
            return False
    for fila, b in zip(filas_eq, b_eq):
        if sum((Fraction(a) * v for a, v in zip(fila, x)), Fraction(0)) != b:
            return False
    return True
