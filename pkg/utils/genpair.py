"""
Módulo de pares generalizados en superficies tóricas
Discrepancias logarítmicas, predicados glc/gklt/gLCY,
rayos crepantes y adjunción a curvas invariantes
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from utils.divisor import (
    BNefDivisor, ToricDivisor, canonical_divisor, class_of, intersect, moduli_cero,
    pullback, pushforward, toric_divisor,
)
from utils.errores import ErrorAbanico, ErrorDivisor, ErrorPar
from utils.fan import minimal_resolution, new_fan, refinement, star_subdivision
from utils.lattice import det2, is_primitive, vector

logger = logging.getLogger(__name__)

LC = "lc"
CREPANTE = "crepante"
CONO_LC = "cono_lc"


@dataclass(frozen=True)
class OrbifoldStructure:
    """Índices n_P > 1 sobre divisores invariantes; los rayos ausentes valen 1"""
    valores: tuple = ()

    def __post_init__(self):
        for v, n in self.valores:
            if n < 1:
                raise ErrorPar(f"Índice orbifold inválido {n} en ({v})")

    def n(self, v):
        for rayo, valor in self.valores:
            if rayo == v:
                return valor
        return 1

    def es_trivial(self):
        return all(n == 1 for _, n in self.valores)


def estructura_orbifold(indices=None):
    """Construye una OrbifoldStructure desde {rayo: n} descartando los n = 1"""
    pares = sorted((vector(v), int(n)) for v, n in (indices or {}).items())
    return OrbifoldStructure(tuple((v, n) for v, n in pares if n != 1))


@dataclass(frozen=True)
class GeneralizedPair:
    """Par generalizado (X, B, M) con B invariante y M b-nef tórico"""
    base: object
    boundary: ToricDivisor
    moduli: BNefDivisor

    def __post_init__(self):
        if self.boundary.fan != self.base:
            raise ErrorPar("El borde no vive en el abanico base")
        if self.moduli.base != self.base:
            raise ErrorPar("El modelo de M no refina al abanico base")
        for v, c in self.boundary.items():
            if c < 0 or c > 1:
                raise ErrorPar(f"Coeficiente de borde fuera de [0,1] en ({v}): {c}")


@dataclass(frozen=True)
class AdjointPair:
    """Par generalizado en P^1 obtenido por adjunción: dos puntos fijos y el grado de M_S"""
    puntos: tuple
    coeficientes: tuple
    grado_moduli: Fraction

    def grado(self):
        return Fraction(-2) + sum(self.coeficientes, Fraction(0)) + self.grado_moduli


@dataclass(frozen=True)
class AdjunctionData:
    """Datos locales de la adjunción en cada punto fijo Q de D_rho"""
    curve: object
    puntos: tuple
    i_Q: tuple
    m_Q: tuple
    aporte_borde: tuple
    aporte_moduli: tuple
    marcados: tuple = field(default=())


def generalized_pair(base, boundary=None, moduli=None):
    """
    Construye un par generalizado completando los datos opcionales.

    Args:
        base: Fan de X
        boundary: ToricDivisor en base, dict {rayo: coeficiente} o None
        moduli: BNefDivisor o None (M = 0 en la resolución mínima)

    Returns:
        GeneralizedPair: El par validado
    """
    if boundary is None or isinstance(boundary, dict):
        boundary = toric_divisor(base, boundary)
    if moduli is None:
        moduli = moduli_cero(base)
    return GeneralizedPair(base=base, boundary=boundary, moduli=moduli)


def trace(P):
    """Traza de M en X: pushforward del divisor de moduli"""
    return pushforward(P.moduli.divisor, P.moduli.morphism)


def log_canonical_divisor(P):
    """K_X + B + M_X"""
    return canonical_divisor(P.base) + P.boundary + trace(P)


def _refina(Z, X):
    return all(v in Z.rays for v in X.rays)


def discrepancy_divisor(P, Z):
    """
    Borde crepante B_Z = pullback(K_X + B + M_X) - K_Z - M_Z en un refinamiento Z
    del abanico base y del modelo de M.
    """
    if not _refina(Z, P.base) or not _refina(Z, P.moduli.model):
        raise ErrorPar(f"{Z} no refina al abanico base y al modelo de M")
    hacia_base = refinement(Z, P.base)
    hacia_modelo = refinement(Z, P.moduli.model)
    M_Z = pullback(P.moduli.divisor, hacia_modelo)
    return pullback(log_canonical_divisor(P), hacia_base) - canonical_divisor(Z) - M_Z


def modelo_de_calculo(P, extra=()):
    """Refinamiento suave común de la base y del modelo de M, con rayos extra opcionales"""
    Z = P.moduli.model
    faltantes = [vector(e) for e in extra if vector(e) not in Z.rays]
    if faltantes:
        Z = minimal_resolution(new_fan(list(Z.rays) + faltantes))[0]
    return Z


def log_discrepancy(P, e):
    """
    Discrepancia logarítmica generalizada a_e = 1 - coeff_e(B_Z).

    Args:
        P: GeneralizedPair
        e: Rayo primitivo (valoración tórica)

    Returns:
        Fraction: a_e(X, B, M)
    """
    e = vector(e)
    if not is_primitive(e):
        raise ErrorPar(f"La valoración ({e}) no es primitiva")
    Z = P.moduli.model
    if e not in Z.rays:
        Z = star_subdivision(Z, e)[0]
    return 1 - discrepancy_divisor(P, Z).coeff(e)


def discrepancias(P, Z=None):
    """Diccionario {rayo: a_rayo} en los rayos del modelo de cálculo"""
    Z = Z or modelo_de_calculo(P)
    B_Z = discrepancy_divisor(P, Z)
    return {v: 1 - c for v, c in B_Z.items()}


def is_glc(P):
    return all(a >= 0 for a in discrepancias(P).values())


def is_gklt(P):
    return all(a > 0 for a in discrepancias(P).values())


def is_log_trivial(P):
    """K_X + B + M_X Q-linealmente trivial"""
    return class_of(log_canonical_divisor(P)).is_zero()


def is_glcy(P):
    return is_log_trivial(P) and is_glc(P)


def crepant_rays(P, model):
    """
    Rayos del modelo con a = 0 (marca "lc"), rayos excepcionales sobre la base
    con a = 1 (marca "crepante") y conos donde a se anula en ambos rayos
    (marca "cono_lc": infinitos lugares lc).

    Returns:
        list: Tuplas (rayo o cono, marca)
    """
    a = discrepancias(P, model)
    resultado = []
    for v in model.rays:
        if a[v] == 0:
            resultado.append((v, LC))
        elif a[v] == 1 and v not in P.base.rays:
            resultado.append((v, CREPANTE))
    for u, w in model.cones():
        if a[u] == 0 and a[w] == 0:
            resultado.append(((u, w), CONO_LC))
    return resultado


def _contiene_punto(X, v, rho, Q):
    """D_v pasa por el punto fijo D_rho . D_Q si v es rayo del cono <rho, Q>"""
    return any(rho in c and Q in c and v in c for c in X.cones())


def adjunction_to_invariant_curve(P, rho, orbifold=None):
    """
    Adjunción tórica a la curva invariante D_rho (coeficiente 1 en B).
    Se calcula en el modelo suave de M: el coeficiente en cada punto fijo es el
    coeficiente del rayo vecino en el borde crepante, y M_S tiene grado M_Y . D_rho.

    Returns:
        tuple: (AdjointPair, AdjunctionData)
    """
    rho = vector(rho)
    try:
        coeficiente = P.boundary.coeff(rho)
    except ErrorAbanico:
        raise ErrorPar(f"({rho}) no es un rayo de la base")
    if coeficiente != 1:
        raise ErrorPar(f"D({rho}) aparece en el borde con coeficiente {coeficiente}, no 1")
    orbifold = orbifold or OrbifoldStructure()
    for v, _ in orbifold.valores:
        if v not in P.base.rays:
            raise ErrorPar(f"La estructura orbifold usa ({v}), que no es rayo de la base")

    Y = P.moduli.model
    B_Y = discrepancy_divisor(P, Y)
    S_Y = toric_divisor(Y, {rho: 1})
    grado_moduli = intersect(P.moduli.divisor, S_Y)

    vecinos_base = P.base.neighbors(rho)
    vecinos_modelo = Y.neighbors(rho)
    puntos, indices, orbifolds, coeficientes, aportes_b, aportes_m = [], [], [], [], [], []
    for lado in (0, 1):
        vecino = vecinos_base[lado]
        i_Q = abs(det2(vecino, rho))
        b = P.boundary.coeff(vecino)
        coef = B_Y.coeff(vecinos_modelo[lado])
        # parte del diferente que viene solo del borde
        diferente_borde = 1 - (1 - b) / Fraction(i_Q)
        puntos.append(vecino)
        indices.append(i_Q)
        orbifolds.append(orbifold.n(vecino) * i_Q)
        coeficientes.append(coef)
        aportes_b.append(diferente_borde)
        aportes_m.append(coef - diferente_borde)

    # punto marcado: dos curvas distintas de D_rho con n = 2 por el mismo punto fijo
    marcados = tuple(
        Q for Q in puntos
        if sum(1 for v, n in orbifold.valores
               if v != rho and n == 2 and _contiene_punto(P.base, v, rho, Q)) >= 2
    )
    if marcados:
        raise ErrorPar(f"Puntos marcados en D({rho}): {', '.join(f'({Q})' for Q in marcados)}")

    pareja = AdjointPair(puntos=tuple(puntos), coeficientes=tuple(coeficientes),
                         grado_moduli=grado_moduli)
    datos = AdjunctionData(
        curve=rho, puntos=tuple(puntos), i_Q=tuple(indices), m_Q=tuple(orbifolds),
        aporte_borde=tuple(aportes_b), aporte_moduli=tuple(aportes_m), marcados=marcados,
    )
    grado_x = intersect(log_canonical_divisor(P), toric_divisor(P.base, {rho: 1}))
    if grado_x != pareja.grado():
        raise ErrorPar(
            f"Identidad de grados violada en D({rho}): {grado_x} != {pareja.grado()}"
        )
    logger.debug("Adjunción a D(%s): coeficientes %s, grado de M_S %s", rho, coeficientes, grado_moduli)
    return pareja, datos


def crepant_pullback_pair(P, Y):
    """
    Pullback logarítmico de P a un modelo Y que refina la base: par (Y, B_Y, M)
    con B_Y el borde crepante. Requiere B_Y efectivo.
    """
    if not _refina(Y, P.base):
        raise ErrorPar(f"{Y} no refina a la base")
    Z = P.moduli.model
    if not _refina(Z, Y):
        Z = minimal_resolution(new_fan(list(Z.rays) + [v for v in Y.rays if v not in Z.rays]))[0]
    M_Z = pullback(P.moduli.divisor, refinement(Z, P.moduli.model))
    moduli = BNefDivisor(model=Z, morphism=refinement(Z, Y), divisor=M_Z)
    B_Y = pushforward(discrepancy_divisor(P, Z), refinement(Z, Y))
    if not B_Y.is_effective():
        raise ErrorDivisor(f"El pullback logarítmico no es efectivo en {Y}")
    return GeneralizedPair(base=Y, boundary=B_Y, moduli=moduli)


def push_pair(P, Z):
    """
    Empuja el par a un abanico Z obtenido contrayendo rayos de la base
    (el borde se empuja, M queda igual como b-divisor).
    """
    if not _refina(P.base, Z):
        raise ErrorPar(f"{Z} no se obtiene contrayendo rayos de {P.base}")
    f = refinement(P.base, Z)
    B_Z = pushforward(P.boundary, f)
    Y = P.moduli.model
    moduli = BNefDivisor(model=Y, morphism=refinement(Y, Z), divisor=P.moduli.divisor)
    return GeneralizedPair(base=Z, boundary=B_Z, moduli=moduli)
