"""
Módulo de abanicos completos del plano
Refinamientos, blow-ups, contracciones, resolución mínima,
equivalencia por GL(2,Z) y enumeración de abanicos
"""
import functools
import logging
from dataclasses import dataclass

from utils.errores import ErrorAbanico, ErrorRed
from utils.lattice import (
    LatticeVector, clave_angular, cone_smoothing_rays, det2, en_cono, euclides_extendido,
    is_primitive, ordenar_antihorario, primitive, vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fan:
    """Abanico completo: rayos primitivos en orden antihorario"""
    rays: tuple

    def __post_init__(self):
        rayos = self.rays
        if len(rayos) < 3:
            raise ErrorAbanico(f"Un abanico completo necesita al menos 3 rayos, hay {len(rayos)}")
        if len(set(rayos)) != len(rayos):
            raise ErrorAbanico("El abanico tiene rayos repetidos")
        for v in rayos:
            if not is_primitive(v):
                raise ErrorAbanico(f"Rayo no primitivo: ({v})")
        for u, w in self.cones():
            if det2(u, w) <= 0:
                raise ErrorAbanico(
                    f"El cono <({u}), ({w})> no es estrictamente convexo o el abanico no es completo"
                )
        # una sola vuelta alrededor del origen
        vueltas = sum(1 for u, w in self.cones() if clave_angular(w) < clave_angular(u))
        if vueltas != 1:
            raise ErrorAbanico("Los rayos no están en orden antihorario de una sola vuelta")

    def __len__(self):
        return len(self.rays)

    def __contains__(self, v):
        return v in self.rays

    def __str__(self):
        return "{" + ", ".join(f"({v})" for v in self.rays) + "}"

    def index(self, v):
        try:
            return self.rays.index(v)
        except ValueError:
            raise ErrorAbanico(f"({v}) no es un rayo del abanico {self}")

    def cones(self):
        """Lista de conos (v_i, v_{i+1}) incluyendo el cierre"""
        n = len(self.rays)
        return [(self.rays[i], self.rays[(i + 1) % n]) for i in range(n)]

    def neighbors(self, v):
        """Rayos anterior y siguiente de v en orden antihorario"""
        i = self.index(v)
        n = len(self.rays)
        return self.rays[(i - 1) % n], self.rays[(i + 1) % n]

    def cone_containing(self, v):
        """Índice del primer cono (v_i, v_{i+1}) que contiene a v"""
        for i, (u, w) in enumerate(self.cones()):
            if en_cono(v, u, w):
                return i
        raise ErrorAbanico(f"Ningún cono contiene a ({v}); el abanico no es completo")

    def is_smooth(self):
        return all(det2(u, w) == 1 for u, w in self.cones())

    def singular_cones(self):
        return [(u, w) for u, w in self.cones() if det2(u, w) != 1]


@dataclass(frozen=True)
class FanMorphism:
    """Morfismo tórico birracional dado por un refinamiento source -> target"""
    source: Fan
    target: Fan
    exceptional_rays: tuple

    def __post_init__(self):
        faltantes = [v for v in self.target.rays if v not in self.source.rays]
        if faltantes:
            raise ErrorAbanico(
                "El origen no refina al destino; faltan los rayos "
                + ", ".join(f"({v})" for v in faltantes)
            )


@dataclass(frozen=True)
class MfsStructure:
    """
    Fibración de Mori X -> P^1 dada por un par de rayos opuestos (v, -v).
    La proyección es la forma lineal w -> det(v, w).
    """
    fiber_ray_pair: tuple
    base: LatticeVector

    def project(self, w):
        return self.base.x * w.x + self.base.y * w.y


def refinement(source, target):
    """
    Construye el morfismo source -> target validando que source refina a target.

    Returns:
        FanMorphism: con los rayos excepcionales en el orden de source
    """
    excepcionales = tuple(v for v in source.rays if v not in target.rays)
    return FanMorphism(source=source, target=target, exceptional_rays=excepcionales)


def new_fan(rays):
    """
    Construye un abanico desde una lista de vectores: primitiviza, ordena
    en sentido antihorario y valida.

    Args:
        rays: Lista de LatticeVector, tuplas o textos "x,y"

    Returns:
        Fan: El abanico validado
    """
    try:
        primitivos = [primitive(vector(r)) for r in rays]
    except ErrorRed as e:
        raise ErrorAbanico(str(e))
    if len(set(primitivos)) != len(primitivos):
        raise ErrorAbanico("Hay rayos paralelos (iguales tras primitivizar)")
    if len(primitivos) < 3:
        raise ErrorAbanico(f"Se necesitan al menos 3 rayos distintos, hay {len(primitivos)}")
    return Fan(tuple(ordenar_antihorario(primitivos)))


@functools.lru_cache(maxsize=None)
def minimal_resolution(X):
    """
    Resolución mínima: inserta en cada cono singular sus rayos de Hirzebruch-Jung.

    Returns:
        tuple: (Fan suave, FanMorphism hacia X)
    """
    rayos = []
    for u, w in X.cones():
        rayos.append(u)
        rayos.extend(cone_smoothing_rays(u, w))
    Y = new_fan(rayos)
    return Y, refinement(Y, X)


def star_subdivision(X, r):
    """
    Blow-up tórico: agrega el rayo r al abanico.

    Returns:
        tuple: (Fan con r, FanMorphism con r como rayo excepcional)
    """
    r = vector(r)
    if not is_primitive(r):
        raise ErrorAbanico(f"El rayo a insertar no es primitivo: ({r})")
    if r in X.rays:
        raise ErrorAbanico(f"({r}) ya es un rayo del abanico")
    Y = new_fan(list(X.rays) + [r])
    return Y, refinement(Y, X)


def is_removable(X, r):
    """True si D_r se contrae por una contracción divisorial (vecinos con det > 0)"""
    if len(X) < 4:
        return False
    anterior, siguiente = X.neighbors(r)
    return det2(anterior, siguiente) > 0


def remove_ray(X, r):
    """
    Contracción divisorial de la curva D_r: quita el rayo r.

    Returns:
        Fan: El abanico sin r
    """
    r = vector(r)
    if r not in X.rays:
        raise ErrorAbanico(f"({r}) no es un rayo del abanico")
    if len(X) <= 3:
        raise ErrorAbanico("Un abanico de 3 rayos no admite contracciones divisoriales")
    anterior, siguiente = X.neighbors(r)
    if det2(anterior, siguiente) <= 0:
        raise ErrorAbanico(
            f"Los vecinos ({anterior}) y ({siguiente}) de ({r}) no forman un cono "
            "estrictamente convexo; la contracción no es divisorial"
        )
    return Fan(tuple(v for v in X.rays if v != r))


def mfs_structures(X):
    """Una fibración de Mori por cada par de rayos opuestos {v, -v}"""
    estructuras = []
    for v in X.rays:
        if -v in X.rays and v > -v:
            estructuras.append(MfsStructure(fiber_ray_pair=(v, -v), base=LatticeVector(-v.y, v.x)))
    return estructuras


def picard_rank(X):
    return len(X.rays) - 2


# --- Equivalencia por GL(2, Z) ---

def aplicar_matriz(g, v):
    (a, b), (c, d) = g
    return LatticeVector(a * v.x + b * v.y, c * v.x + d * v.y)


def multiplicar_matrices(g, h):
    (a, b), (c, d) = g
    (e, f), (p, q) = h
    return ((a * e + b * p, a * f + b * q), (c * e + d * p, c * f + d * q))


def invertir_unimodular(g):
    (a, b), (c, d) = g
    det = a * d - b * c
    if det not in (1, -1):
        raise ErrorAbanico(f"La matriz {g} no es unimodular")
    return ((det * d, -det * b), (-det * c, det * a))


def matriz_normalizadora(u, w):
    """
    Matriz g de GL(2,Z) con g*u = (1,0) y g*w = (a, |det(u,w)|), 0 <= a < |det(u,w)|.

    Args:
        u: Rayo primitivo
        w: Rayo no paralelo a u

    Returns:
        tuple: Matriz 2x2 como tupla de filas
    """
    delta = det2(u, w)
    if delta == 0:
        raise ErrorAbanico(f"Par degenerado ({u}), ({w})")
    _, p, q = euclides_extendido(u.x, u.y)
    s = 1 if delta > 0 else -1
    fila2 = (-s * u.y, s * u.x)
    a = p * w.x + q * w.y
    t = a // abs(delta)
    fila1 = (p - t * fila2[0], q - t * fila2[1])
    return (fila1, fila2)


def _imagen_normalizada(X, g):
    return tuple(v.como_tupla() for v in ordenar_antihorario([aplicar_matriz(g, v) for v in X.rays]))


def _pares_adyacentes(X):
    # ambos sentidos de cada cono: orientaciones que preservan y que invierten
    for u, w in X.cones():
        yield u, w
        yield w, u


def canonical_form(X):
    """Lista de rayos lexicográficamente mínima entre las imágenes normalizadas por pares adyacentes"""
    return min(_imagen_normalizada(X, matriz_normalizadora(u, w)) for u, w in _pares_adyacentes(X))


def lattice_equivalent(X, Y):
    """
    Decide si algún elemento de GL(2,Z) lleva los rayos de X a los de Y.

    Returns:
        tuple: (bool, matriz testigo o None); el testigo g cumple g(X) = Y
    """
    if len(X) != len(Y):
        return False, None
    u, w = X.rays[0], X.rays[1]
    g_x = matriz_normalizadora(u, w)
    imagen_x = set(_imagen_normalizada(X, g_x))
    for a, b in _pares_adyacentes(Y):
        h = matriz_normalizadora(a, b)
        if set(_imagen_normalizada(Y, h)) == imagen_x:
            testigo = multiplicar_matrices(invertir_unimodular(h), g_x)
            return True, testigo
    return False, None


def vectores_primitivos(cota):
    """Vectores primitivos con |x|, |y| <= cota, en orden antihorario"""
    return ordenar_antihorario([
        LatticeVector(x, y)
        for x in range(-cota, cota + 1)
        for y in range(-cota, cota + 1)
        if is_primitive(LatticeVector(x, y))
    ])


def _recorrer_abanicos(candidatos, max_rays):
    # Búsqueda en profundidad: el primer rayo es el de menor índice,
    # los siguientes avanzan en ángulo con det > 0 entre consecutivos.
    total = len(candidatos)
    for inicio in range(total):
        primero = candidatos[inicio]
        pila = [(inicio, [primero])]
        while pila:
            ultimo_indice, camino = pila.pop()
            ultimo = camino[-1]
            if len(camino) >= 3 and det2(ultimo, primero) > 0:
                yield tuple(camino)
            if len(camino) == max_rays:
                continue
            for j in range(total - 1, ultimo_indice, -1):
                v = candidatos[j]
                if det2(ultimo, v) > 0:
                    pila.append((j, camino + [v]))


def enumerate_fans(coord_bound, max_rays):
    """
    Todos los abanicos completos con rayos en la caja |x|,|y| <= coord_bound
    y a lo sumo max_rays rayos, uno por clase de equivalencia en GL(2,Z).

    Returns:
        list: Abanicos en orden determinista de descubrimiento
    """
    if coord_bound < 1 or max_rays < 3:
        raise ErrorAbanico("Se requiere coord_bound >= 1 y max_rays >= 3")
    candidatos = vectores_primitivos(coord_bound)
    vistos = {}
    for rayos in _recorrer_abanicos(candidatos, max_rays):
        X = Fan(rayos)
        clave = canonical_form(X)
        if clave not in vistos:
            vistos[clave] = X
    logger.debug("enumerate_fans(%s, %s): %s clases", coord_bound, max_rays, len(vistos))
    return list(vistos.values())


# --- Clasificadores ---

def is_Fn(X):
    """
    Reconoce F_n (contracción de la curva -n de Sigma_n) con n >= 2.

    Returns:
        int o None: n si X es equivalente a F_n, None si no
    """
    if len(X) != 3:
        return None
    for i, v in enumerate(X.rays):
        siguiente = X.rays[(i + 1) % 3]
        otro = X.rays[(i + 2) % 3]
        opuesto = -v
        if det2(siguiente, opuesto) == 1 and det2(opuesto, otro) == 1:
            n = det2(siguiente, otro)
            if n >= 2:
                return n
    return None


def is_P2(X):
    return len(X) == 3 and X.is_smooth()


def hirzebruch_index(X):
    """n tal que X es Sigma_n (abanicos suaves de 4 rayos); None si no aplica"""
    if len(X) != 4 or not X.is_smooth():
        return None
    return max(abs(det2(*X.neighbors(v))) for v in X.rays)


# --- Abanicos estándar ---

def abanico_p2():
    return new_fan([(1, 0), (0, 1), (-1, -1)])


def abanico_p1xp1():
    return new_fan([(1, 0), (0, 1), (-1, 0), (0, -1)])


def abanico_hirzebruch(n):
    """Sigma_n con rayos (1,0), (0,1), (-1,n), (0,-1); C0 = D(0,1) tiene C0^2 = -n"""
    return new_fan([(1, 0), (0, 1), (-1, n), (0, -1)])


def abanico_fn(n):
    """F_n: Sigma_n con la curva C0 = D(0,1) contraída"""
    return new_fan([(1, 0), (-1, n), (0, -1)])


def abanico_blowup_p2():
    """Blow-up de P^2 en el punto fijo del cono <(1,0), (0,1)>"""
    return star_subdivision(abanico_p2(), LatticeVector(1, 1))[0]
