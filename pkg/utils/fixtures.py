"""
Módulo de fixtures
Abanicos de los casos tóricos, ejemplos de pares generalizados y la
familia de pares gLCY usada para recorrer abanicos enumerados
"""
import functools
import os
from fractions import Fraction

from utils.complexity import coordenadas_en_base, decomposition, nef_generators
from utils.divisor import (
    BNefDivisor, borde_torico, canonical_divisor, divisor_primo, pushforward, toric_divisor,
)
from utils.errores import ErrorVerificacion
from utils.fan import abanico_fn, abanico_hirzebruch, minimal_resolution, new_fan, refinement
from utils.genpair import generalized_pair
from utils.lattice import vector
from utils.rutas import obtener_ruta_fixtures
from utils.serializacion import cargar_archivo_json, par_desde_dict

CASOS = ("4.1", "4.2", "4.3")


@functools.lru_cache(maxsize=None)
def _cargar(nombre):
    return cargar_archivo_json(os.path.join(obtener_ruta_fixtures(), nombre))


def cargar_casos():
    return _cargar('casos.json')


def cargar_ejemplos():
    return _cargar('ejemplos.json')


def caso(identificador):
    """Datos crudos de un caso ("4.1", "4.2" o "4.3")"""
    casos = cargar_casos()
    if identificador not in CASOS:
        raise ErrorVerificacion(f"Caso desconocido: {identificador}")
    return casos[identificador]


def abanico_de(rayos):
    return new_fan([tuple(r) for r in rayos])


def canonicos_rho1():
    """Los cinco abanicos canónicos de rango de Picard 1: {nombre: Fan}"""
    return {nombre: abanico_de(rayos) for nombre, rayos in cargar_casos()["canonicos_rho1"].items()}


# --- Sistemas de factibilidad ---

def sistema_hirzebruch(n):
    """
    Datos del sistema sobre Sigma_n: -K en la base (C0, f) con C0 = D(0,1) la
    sección negativa y f = D(1,0) una fibra.
    """
    Y = abanico_hirzebruch(n)
    C0 = divisor_primo(Y, (0, 1))
    f = divisor_primo(Y, (1, 0))
    rhs = coordenadas_en_base(-canonical_divisor(Y), [C0, f])
    if rhs is None:
        raise ErrorVerificacion(f"-K de Sigma_{n} no está en el span de C0 y f")
    return {"id": f"hirzebruch-{n}", "total": 3, "multiplicador": 1, "pendiente": n,
            "rhs_C0": rhs[0], "rhs_f": rhs[1]}


def sistema(identificador):
    """
    Datos de un sistema: "hirzebruch-n", "case42" o "case43".

    Raises:
        ErrorVerificacion: Si el identificador no existe
    """
    if identificador.startswith("hirzebruch-"):
        try:
            n = int(identificador.split("-", 1)[1])
        except ValueError:
            raise ErrorVerificacion(f"Sistema desconocido: {identificador}")
        return sistema_hirzebruch(n)
    for clave in ("4.2", "4.3"):
        datos = cargar_casos()[clave]["sistema"]
        if datos["id"] == identificador:
            return dict(datos)
    raise ErrorVerificacion(f"Sistema desconocido: {identificador}")


# --- Ejemplos ---

def par_ejemplo_fn(n):
    """
    (F_n, 0, M) con M = F0 + F1 + S1 en Sigma_n: las dos fibras invariantes y
    la sección de autointersección n.
    """
    X = abanico_fn(n)
    Y = abanico_hirzebruch(n)
    M_Y = toric_divisor(Y, {(1, 0): 1, (-1, n): 1, (0, -1): 1})
    moduli = BNefDivisor(model=Y, morphism=refinement(Y, X), divisor=M_Y)
    return generalized_pair(X, None, moduli)


def descomposicion_fn(P, n):
    """Las tres componentes de moduli F0, F1, S1 con peso 1"""
    Y = P.moduli.model
    componentes = []
    for v in ((1, 0), (-1, n), (0, -1)):
        D = divisor_primo(Y, v)
        componentes.append((BNefDivisor(model=Y, morphism=P.moduli.morphism, divisor=D), 1))
    return decomposition(None, (), componentes)


def par_no_desciende():
    return par_desde_dict(cargar_ejemplos()["no_desciende"]["par"])


def descomposicion_no_desciende(P):
    datos = cargar_ejemplos()["no_desciende"]
    componentes = []
    for rayo, peso in datos["componentes"]:
        D = divisor_primo(P.moduli.model, vector(rayo))
        componentes.append((BNefDivisor(model=P.moduli.model, morphism=P.moduli.morphism, divisor=D),
                            Fraction(peso)))
    return decomposition(None, (), componentes)


# --- Familia de pares gLCY ---

def pesos_racionales(cota_denominador):
    """t en (0, 1] con denominador acotado, ordenados por denominador y numerador"""
    return [
        Fraction(p, q)
        for q in range(1, cota_denominador + 1)
        for p in range(1, q + 1)
        if Fraction(p, q).denominator == q
    ]


def familia_glcy(X, cota_denominador=4, cota_soporte=4, generadores_por_abanico=None):
    """
    Pares gLCY sobre X: el borde tórico, y para cada generador nef 0/1 N de la
    resolución mínima Y y cada peso t con denominador acotado, el par con
    moduli t*N y borde el pushforward de (suma de D_Y) - t*N.
    `generadores_por_abanico` acota cuántos generadores se usan (None: todos).

    Yields:
        tuple: (nombre, GeneralizedPair)
    """
    yield "borde_torico", generalized_pair(X, borde_torico(X))
    Y, pi = minimal_resolution(X)
    pesos = pesos_racionales(cota_denominador)
    generadores = nef_generators(Y, 1, cota_soporte)
    if generadores_por_abanico is not None:
        generadores = generadores[:generadores_por_abanico]
    for k, N in enumerate(generadores):
        for t in pesos:
            moduli = BNefDivisor(model=Y, morphism=pi, divisor=t * N)
            borde = pushforward(borde_torico(Y) - t * N, pi)
            yield f"moduli_{k}_t={t}", generalized_pair(X, borde, moduli)
