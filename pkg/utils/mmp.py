"""
Módulo del programa de modelos minimales tórico
Contracciones K-negativas, terminación en rango de Picard 1 o fibración
de Mori, y las construcciones de modelos intermedios para rho = 2 y rho = 1
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from utils.divisor import canonical_divisor, divisor_primo, intersect
from utils.errores import ErrorAbanico, ErrorMmp
from utils.fan import (
    abanico_p1xp1, is_Fn, is_removable, lattice_equivalent, mfs_structures, minimal_resolution,
    picard_rank, refinement, remove_ray, star_subdivision,
)
from utils.genpair import discrepancias, generalized_pair, log_discrepancy
from utils.lattice import LatticeVector, coordenadas_en_cono, det2, en_interior_relativo, is_primitive

logger = logging.getLogger(__name__)

TERMINAL_RHO1 = "rho1"
TERMINAL_MFS = "mfs"


@dataclass(frozen=True)
class PasoMmp:
    rayo: LatticeVector
    k_interseccion: Fraction
    abanico: object


@dataclass(frozen=True)
class MmpTrace:
    """Pasos de la corrida del MMP y estado terminal"""
    inicial: object
    pasos: tuple
    final: object
    terminal: str
    mfs: tuple = ()


@dataclass(frozen=True)
class ModeloIntermedio:
    """
    Y -> X extrae a lo sumo un rayo (excepcional) y Y -> Z contrae los rayos
    `contraidos` hasta rango de Picard 1.
    """
    X: object
    Y: object
    Z: object
    excepcional: LatticeVector = None
    discrepancia: Fraction = None
    contraidos: tuple = ()
    cota_busqueda: int = None
    extraidos: tuple = field(default=())

    @property
    def hacia_x(self):
        return refinement(self.Y, self.X)

    @property
    def hacia_z(self):
        return refinement(self.Y, self.Z)


def k_negative_rays(X):
    """
    Rayos contraíbles con K . D_rho < 0.

    Returns:
        list: Pares (rayo, K . D_rho) en el orden del abanico
    """
    K = canonical_divisor(X)
    resultado = []
    for v in X.rays:
        if not is_removable(X, v):
            continue
        valor = intersect(K, divisor_primo(X, v))
        if valor < 0:
            resultado.append((v, valor))
    return resultado


def run_k_mmp(X):
    """
    Contrae el rayo K-negativo lexicográficamente menor hasta que no quede ninguno.

    Returns:
        MmpTrace: Pasos y estado terminal (rho = 1 o fibraciones de Mori)
    """
    pasos = []
    actual = X
    while True:
        negativos = k_negative_rays(actual)
        if not negativos:
            break
        rayo, valor = min(negativos)
        actual = remove_ray(actual, rayo)
        pasos.append(PasoMmp(rayo=rayo, k_interseccion=valor, abanico=actual))
        logger.debug("MMP: contraído (%s) con K.D = %s -> %s", rayo, valor, actual)
    if picard_rank(actual) == 1:
        return MmpTrace(inicial=X, pasos=tuple(pasos), final=actual, terminal=TERMINAL_RHO1)
    estructuras = mfs_structures(actual)
    if not estructuras:
        raise ErrorMmp(f"El MMP terminó en {actual} sin rango 1 ni fibración de Mori")
    return MmpTrace(inicial=X, pasos=tuple(pasos), final=actual, terminal=TERMINAL_MFS,
                    mfs=tuple(estructuras))


def is_canonical(X):
    """Todos los rayos excepcionales de la resolución mínima tienen a >= 1 para (X, 0, 0)"""
    Y, pi = minimal_resolution(X)
    if not pi.exceptional_rays:
        return True
    a = discrepancias(generalized_pair(X), Y)
    return all(a[e] >= 1 for e in pi.exceptional_rays)


def _cota_de_cono(X, u, w):
    # a <= 1 solo en el triángulo 0, p, q del cono <p, q> de X que contiene a <u, w>
    p, q = X.cones()[X.cone_containing(u + w)]
    return max(abs(p.x), abs(p.y), abs(q.x), abs(q.y))


def _rayos_en_cono(P, u, w, aceptar):
    """
    Rayos primitivos del interior relativo de <u, w> con coordenadas acotadas
    y discrepancia aceptada, en orden lexicográfico. Para (X, 0, 0),
    a_v = s + t con v = s*p + t*q y <p, q> el cono de X que contiene a v.
    """
    cota = _cota_de_cono(P.base, u, w)
    conos = P.base.cones()
    candidatos = []
    for x in range(-cota, cota + 1):
        for y in range(-cota, cota + 1):
            v = LatticeVector(x, y)
            if (x, y) == (0, 0) or not is_primitive(v) or not en_interior_relativo(v, u, w):
                continue
            s, t = coordenadas_en_cono(v, *conos[P.base.cone_containing(v)])
            if aceptar(s + t):
                candidatos.append((v, s + t))
    candidatos.sort()
    if candidatos:
        v, a = candidatos[0]
        if log_discrepancy(P, v) != a:
            raise ErrorMmp(f"Discrepancia inconsistente en ({v})")
    return candidatos, cota


def _contraer(Y, rayos):
    """Quita los rayos en el primer orden que produzca contracciones divisoriales"""
    for orden in (tuple(rayos), tuple(reversed(rayos))):
        try:
            Z = Y
            for r in orden:
                Z = remove_ray(Z, r)
            return Z
        except ErrorAbanico:
            continue
    raise ErrorMmp(f"No se pueden contraer {', '.join(f'({r})' for r in rayos)} en {Y}")


def rho2_intermediate_model(X):
    """
    Para rho(X) = 2 y X distinto de P^1 x P^1: Y -> X que extrae a lo sumo un
    divisor con a en (0,1] y Y -> Z con rho(Z) = 1.

    Returns:
        ModeloIntermedio o None si X es P^1 x P^1
    """
    if picard_rank(X) != 2:
        raise ErrorMmp(f"Se requiere rango de Picard 2; {X} tiene {picard_rank(X)}")
    if lattice_equivalent(X, abanico_p1xp1())[0]:
        return None
    contraibles = sorted(v for v in X.rays if is_removable(X, v))
    if contraibles:
        r = contraibles[0]
        return ModeloIntermedio(X=X, Y=X, Z=remove_ray(X, r), contraidos=(r,))

    # sin contracciones divisoriales los rayos son {v1, v2, -v1, -v2}
    P = generalized_pair(X)
    for v1, v2 in X.cones():
        if det2(v1, v2) == 1:
            continue
        candidatos, cota = _rayos_en_cono(P, v1, v2, lambda a: 0 < a <= 1)
        if not candidatos:
            continue
        v3, a = candidatos[0]
        Y = star_subdivision(X, v3)[0]
        Z = _contraer(Y, (v1, v2))
        if picard_rank(Z) != 1:
            raise ErrorMmp(f"El modelo {Z} no tiene rango de Picard 1")
        logger.debug("rho2: extraído (%s) con a = %s, Z = %s", v3, a, Z)
        return ModeloIntermedio(X=X, Y=Y, Z=Z, excepcional=v3, discrepancia=a,
                                contraidos=(v1, v2), cota_busqueda=cota, extraidos=(v3,))
    raise ErrorMmp(f"{X} no es suave pero ningún cono admite un rayo con a en (0,1]")


def _opuesto_al_cono(X, u, w):
    return next(v for v in X.rays if v not in (u, w))


def rho1_noncanonical_model(X):
    """
    Para rho(X) = 1, X no canónica y no isomorfa a F_n: Y -> X que extrae E con
    a_E(X) en (0,1) y Y -> Z con rho(Z) = 1 que no contrae E.

    Returns:
        ModeloIntermedio: con excepcional = E
    """
    if picard_rank(X) != 1:
        raise ErrorMmp(f"Se requiere rango de Picard 1; {X} tiene {picard_rank(X)}")
    if is_canonical(X):
        raise ErrorMmp(f"{X} es canónica")
    n = is_Fn(X)
    if n is not None:
        raise ErrorMmp(f"{X} es isomorfa a F_{n}")

    P = generalized_pair(X)
    en_abierto = lambda a: 0 < a < 1  # noqa: E731
    todos = []
    for v2, v3 in X.cones():
        candidatos, cota = _rayos_en_cono(P, v2, v3, en_abierto)
        todos.extend((v4, a, v2, v3, cota) for v4, a in candidatos)
    if not todos:
        raise ErrorMmp(f"{X} no es canónica pero no hay rayos con a en (0,1)")

    # primero las extracciones que no son opuestas al tercer rayo
    for v4, a, v2, v3, cota in todos:
        v1 = _opuesto_al_cono(X, v2, v3)
        if v4 == -v1:
            continue
        Y = star_subdivision(X, v4)[0]
        contraible = v2 if det2(v1, v4) > 0 else v3
        Z = remove_ray(Y, contraible)
        return ModeloIntermedio(X=X, Y=Y, Z=Z, excepcional=v4, discrepancia=a,
                                contraidos=(contraible,), cota_busqueda=cota, extraidos=(v4,))

    for v4, a, v2, v3, cota in todos:
        v1 = _opuesto_al_cono(X, v2, v3)
        Y0 = star_subdivision(X, v4)[0]
        for u, w in ((v2, v4), (v4, v3)):
            if det2(u, w) == 1:
                continue
            segundos, cota2 = _rayos_en_cono(P, u, w, en_abierto)
            if not segundos:
                continue
            v5, a5 = segundos[0]
            Y = star_subdivision(Y0, v5)[0]
            contraidos = (v2, v4) if u == v2 else (v3, v4)
            Z = _contraer(Y, contraidos)
            logger.debug("rho1: extraídos (%s), (%s); E = (%s)", v4, v5, v5)
            return ModeloIntermedio(X=X, Y=Y, Z=Z, excepcional=v5, discrepancia=a5,
                                    contraidos=contraidos, cota_busqueda=max(cota, cota2),
                                    extraidos=(v4, v5))
    raise ErrorMmp(f"Los conos junto a -v1 son suaves: {X} sería F_n")
