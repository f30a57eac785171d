"""
Módulo de complejidad generalizada
Descomposiciones, norma y span, variantes orbifold/absoluta/clásica,
búsqueda de la complejidad mínima por programación lineal exacta y
sistemas de factibilidad de los casos tóricos
"""
import functools
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from utils.divisor import (
    BNefDivisor, ToricDivisor, canonical_divisor, class_of, intersect, intersection_matrix,
    is_ample, is_big, is_cartier, is_torsion, linear_equivalent, matriz_sympy,
    pushforward, span_rank, toric_divisor,
)
from utils.errores import ErrorComplejidad
from utils.fan import is_removable, picard_rank
from utils.genpair import OrbifoldStructure, estructura_orbifold
from utils.lattice import vector
from utils.simplex import resolver_lp, verificar_certificado, verificar_solucion

logger = logging.getLogger(__name__)

DIMENSION = 2
ORBIFOLD = "orbifold"
ABSOLUTA = "absolute"
CLASICA = "classic"
VARIANTES = (ORBIFOLD, ABSOLUTA, CLASICA)

COTAS_POR_DEFECTO = {
    "indice_orbifold": 2,
    "multiplo_moduli": 2,
    "cota_soporte_generador": 4,
}


@dataclass(frozen=True)
class Decomposition:
    """
    Descomposición de un par generalizado.
    boundary_components: ((ToricDivisor en la base, peso a_i), ...)
    moduli_components: ((BNefDivisor, peso lambda_i), ...)
    """
    orbifold: OrbifoldStructure = field(default_factory=OrbifoldStructure)
    boundary_components: tuple = ()
    moduli_components: tuple = ()

    def es_vacia(self):
        return not self.boundary_components and not self.moduli_components


@dataclass
class ComplexityReport:
    """Resultado de complexity o search_min_complexity; valores exactos"""
    norma: Fraction
    rango_span: int
    picard: int
    valor_orbifold: Fraction
    valor_clasico: Fraction
    variante: str = ORBIFOLD
    testigo: Decomposition = None
    valor_absoluto: Fraction = None
    cotas: dict = field(default_factory=dict)
    evaluados: int = 0

    @property
    def valor(self):
        if self.variante == CLASICA:
            return self.valor_clasico
        if self.variante == ABSOLUTA and self.valor_absoluto is not None:
            return self.valor_absoluto
        return self.valor_orbifold


def decomposition(orbifold=None, boundary=(), moduli=()):
    """Construye una Decomposition convirtiendo los pesos a racionales exactos"""
    if orbifold is None or isinstance(orbifold, dict):
        orbifold = estructura_orbifold(orbifold)
    return Decomposition(
        orbifold=orbifold,
        boundary_components=tuple((D, Fraction(a)) for D, a in boundary),
        moduli_components=tuple((M, Fraction(l)) for M, l in moduli),
    )


# --- Validación, norma y span ---

def validate_decomposition(P, S):
    """
    Comprueba las desigualdades de una descomposición de P.

    Raises:
        ErrorComplejidad: Si alguna cota o condición se viola
    """
    base = P.base
    for v, _ in S.orbifold.valores:
        if v not in base.rays:
            raise ErrorComplejidad(f"La estructura orbifold usa ({v}), que no es rayo de la base")
    cota = toric_divisor(base, {v: 1 - Fraction(1, n) for v, n in S.orbifold.valores})
    for D, a in S.boundary_components:
        if D.fan != base:
            raise ErrorComplejidad("Componente de borde fuera del abanico base")
        if a < 0 or not D.is_effective():
            raise ErrorComplejidad(f"Componente de borde no efectiva o con peso negativo: {D}")
        for v, c in D.items():
            if (c * S.orbifold.n(v)).denominator != 1:
                raise ErrorComplejidad(f"Coeficiente {c} de ({v}) no es múltiplo de 1/{S.orbifold.n(v)}")
        cota = cota + a * D
    if not cota <= P.boundary:
        raise ErrorComplejidad(f"La parte de borde {cota} excede a B = {P.boundary}")

    suma = ToricDivisor(P.moduli.model, tuple(Fraction(0) for _ in P.moduli.model.rays))
    for M, l in S.moduli_components:
        if M.model != P.moduli.model:
            raise ErrorComplejidad("Componente de moduli fuera del modelo de M")
        if l < 0:
            raise ErrorComplejidad(f"Peso de moduli negativo: {l}")
        if is_torsion(M.divisor):
            raise ErrorComplejidad(f"Componente de moduli de torsión: {M.divisor}")
        suma = suma + l * M.divisor
    if not suma <= P.moduli.divisor:
        raise ErrorComplejidad(f"La parte de moduli {suma} excede a M_Y = {P.moduli.divisor}")


def _empuja(M):
    return pushforward(M.divisor, M.morphism)


def norm(S):
    """Suma de los pesos de borde y de los pesos de moduli con pushforward no de torsión"""
    total = sum((a for _, a in S.boundary_components), Fraction(0))
    total += sum((l for M, l in S.moduli_components if not is_torsion(_empuja(M))), Fraction(0))
    return total


def span_components(S):
    """Componentes del span en la base: B_i y pi_* M_i de peso positivo y no de torsión"""
    componentes = [D for D, a in S.boundary_components if a > 0]
    for M, l in S.moduli_components:
        empujado = _empuja(M)
        if l > 0 and not is_torsion(empujado):
            componentes.append(empujado)
    return componentes


def rho_sigma(S):
    return span_rank(span_components(S))


def complexity(P, S, variant=ORBIFOLD):
    """
    Complejidad de (P; S): dim + rho(S) - |S| (orbifold/absoluta) o dim + rho(X) - |S| (clásica).

    Returns:
        ComplexityReport: Valores exactos y la descomposición como testigo
    """
    if variant not in VARIANTES:
        raise ErrorComplejidad(f"Variante desconocida: {variant}")
    validate_decomposition(P, S)
    if variant in (ABSOLUTA, CLASICA) and not S.orbifold.es_trivial():
        raise ErrorComplejidad(f"La variante {variant} requiere la estructura orbifold trivial")
    n = norm(S)
    r = rho_sigma(S)
    rho_x = picard_rank(P.base)
    valor_orbifold = DIMENSION + r - n
    return ComplexityReport(
        norma=n, rango_span=r, picard=rho_x,
        valor_orbifold=valor_orbifold,
        valor_clasico=DIMENSION + rho_x - n,
        variante=variant, testigo=S,
        valor_absoluto=valor_orbifold if S.orbifold.es_trivial() else None,
    )


# --- Programa lineal de norma máxima ---

def max_norm_lp(P, boundary_components, moduli_components, orbifold=None):
    """
    Maximiza sum a_i + sum lambda_i con las componentes fijas.

    Args:
        P: GeneralizedPair
        boundary_components: ToricDivisor en la base
        moduli_components: BNefDivisor en el modelo de M
        orbifold: OrbifoldStructure (trivial por defecto)

    Returns:
        tuple: (norma óptima, Decomposition testigo)
    """
    orbifold = orbifold or OrbifoldStructure()
    bordes = list(boundary_components)
    modulis = list(moduli_components)
    nb, nm = len(bordes), len(modulis)
    if nb + nm == 0:
        return Fraction(0), Decomposition(orbifold=orbifold)

    filas, b = [], []
    for i, v in enumerate(P.base.rays):
        holgura = P.boundary.coeffs[i] - (1 - Fraction(1, orbifold.n(v)))
        if holgura < 0:
            raise ErrorComplejidad(f"La estructura orbifold excede a B en ({v})")
        if any(D.coeffs[i] != 0 for D in bordes):
            filas.append([D.coeffs[i] for D in bordes] + [Fraction(0)] * nm)
            b.append(holgura)
    for k in range(len(P.moduli.model.rays)):
        if any(M.divisor.coeffs[k] != 0 for M in modulis):
            filas.append([Fraction(0)] * nb + [M.divisor.coeffs[k] for M in modulis])
            b.append(P.moduli.divisor.coeffs[k])

    objetivo = [Fraction(1)] * nb + [
        Fraction(0) if is_torsion(_empuja(M)) else Fraction(1) for M in modulis
    ]
    resultado = resolver_lp(objetivo, filas, b, maximizar=True)
    if not resultado.es_optimo:
        raise ErrorComplejidad(f"El programa de norma máxima terminó como {resultado.estado}")
    pesos = resultado.x
    S = Decomposition(
        orbifold=orbifold,
        boundary_components=tuple((D, pesos[i]) for i, D in enumerate(bordes) if pesos[i] > 0),
        moduli_components=tuple((M, pesos[nb + j]) for j, M in enumerate(modulis) if pesos[nb + j] > 0),
    )
    return resultado.valor, S


# --- Generadores del cono nef ---

def _grados(M, c):
    n = len(c)
    return [sum(c[i] * M[i][j] for i in range(n) if c[i]) for j in range(n)]


def _es_nef_vector(M, c):
    return all(g >= 0 for g in _grados(M, c))


@functools.lru_cache(maxsize=None)
def nef_generators(Y, cota_coeficiente=1, cota_soporte=4, soporte=None):
    """
    Divisores nef enteros efectivos de Y con coeficientes en [0, cota_coeficiente]
    y a lo sumo cota_soporte rayos, que no se escriben como g + (nef efectivo)
    con g un generador anterior. Se recorren por tamaño de soporte creciente.

    Args:
        Y: Fan suave
        cota_coeficiente: Coeficiente máximo
        cota_soporte: Tamaño máximo del soporte
        soporte: tupla de rayos permitidos (None = todos)

    Returns:
        tuple: ToricDivisor nef en Y
    """
    M = intersection_matrix(Y)
    n = len(Y.rays)
    indices = list(range(n)) if soporte is None else sorted(Y.index(v) for v in soporte)
    generadores = []
    for k in range(1, min(cota_soporte, len(indices)) + 1):
        for subconjunto in itertools.combinations(indices, k):
            for valores in itertools.product(range(1, cota_coeficiente + 1), repeat=k):
                c = [0] * n
                for i, x in zip(subconjunto, valores):
                    c[i] = x
                if not _es_nef_vector(M, c):
                    continue
                descompone = any(
                    all(gi <= ci for gi, ci in zip(g, c))
                    and _es_nef_vector(M, [ci - gi for gi, ci in zip(g, c)])
                    for g in generadores
                )
                if not descompone:
                    generadores.append(tuple(c))
    logger.debug("nef_generators(%s): %s generadores", Y, len(generadores))
    return tuple(ToricDivisor(Y, c) for c in generadores)


# --- Búsqueda de la complejidad mínima ---

@dataclass(frozen=True)
class _Candidato:
    tipo: str
    rayo: object
    divisor: object
    capacidad: Fraction
    direccion: int


def _normalizar_direccion(coords):
    pivote = next(c for c in coords if c != 0)
    return tuple(c / pivote for c in coords)


def _a_fraction(x):
    return Fraction(int(x.p), int(x.q))


def _aniquilador(vectores, dimension):
    if not vectores:
        return [tuple(Fraction(1 if i == j else 0) for j in range(dimension)) for i in range(dimension)]
    nucleo = matriz_sympy(vectores).nullspace()
    return [tuple(_a_fraction(x) for x in columna) for columna in nucleo]


def _cierre(base, direcciones):
    """Índices de las direcciones en el span de las direcciones `base`"""
    dimension = len(direcciones[0])
    anulan = _aniquilador([direcciones[i] for i in base], dimension)
    return frozenset(
        i for i, d in enumerate(direcciones)
        if all(sum((x * y for x, y in zip(d, a)), Fraction(0)) == 0 for a in anulan)
    )


def _planos_por_rango(direcciones, rango_maximo):
    """
    Genera, rango por rango, los subespacios generados por direcciones (flats)
    como pares (miembros, base) en orden determinista.
    """
    nivel = {frozenset(): ()}
    for rango in range(1, rango_maximo + 1):
        siguiente = {}
        for miembros, base in nivel.items():
            cubiertos = set(miembros)
            for d in range(len(direcciones)):
                if d in cubiertos:
                    continue
                nueva_base = base + (d,)
                cierre = _cierre(nueva_base, direcciones)
                cubiertos |= cierre
                if cierre not in siguiente:
                    siguiente[cierre] = nueva_base
        if not siguiente:
            return
        yield rango, list(siguiente.items())
        nivel = siguiente


def _estructuras_orbifold(P, indice):
    rayos = [v for v, b in P.boundary.items() if b > 0]
    opciones = []
    for v in rayos:
        b = P.boundary.coeff(v)
        opciones.append([n for n in range(1, indice + 1) if 1 - Fraction(1, n) <= b])
    for eleccion in itertools.product(*opciones):
        yield estructura_orbifold(dict(zip(rayos, eleccion)))


def _capacidad(b, n):
    # peso máximo de D/n cuando (1 - 1/n) D ya está en el borde
    return n * b - n + 1


def _candidatos(P, orbifold, generadores, direcciones):
    candidatos = []
    for v, b in P.boundary.items():
        if b <= 0:
            continue
        n = orbifold.n(v)
        cap = _capacidad(b, n)
        if cap <= 0:
            continue
        D = toric_divisor(P.base, {v: Fraction(1, n)})
        candidatos.append(_Candidato("borde", v, D, cap, _indice_direccion(D, direcciones)))
    for M in generadores:
        empujado = _empuja(M)
        if is_torsion(empujado):
            continue
        candidatos.append(_Candidato("moduli", None, M, None, _indice_direccion(empujado, direcciones)))
    return candidatos


def _indice_direccion(D, direcciones):
    clave = _normalizar_direccion(class_of(D).coords)
    if clave not in direcciones:
        direcciones[clave] = len(direcciones)
    return direcciones[clave]


def generadores_de_moduli(P, multiplo, cota_soporte):
    """BNefDivisor generadores con soporte dentro del soporte de M_Y"""
    Y = P.moduli.model
    if not P.moduli.divisor.is_effective():
        return ()
    soporte = tuple(P.moduli.divisor.support())
    if not soporte:
        return ()
    return tuple(
        BNefDivisor(model=Y, morphism=P.moduli.morphism, divisor=D)
        for D in nef_generators(Y, multiplo, cota_soporte, soporte)
    )


def _mejora(nuevo, actual):
    # menor valor; a igual valor, menor rango del testigo
    return nuevo[0] < actual[0] or (nuevo[0] == actual[0] and nuevo[1] < actual[1])


def search_min_complexity(P, cotas=None):
    """
    Complejidad orbifold mínima sobre la familia acotada de descomposiciones:
    componentes de borde D/n con n <= indice_orbifold y componentes de moduli
    tomadas de los generadores nef del modelo. Para cada subespacio generado
    por clases de componentes se maximiza la norma con las componentes cuya
    clase está en él.

    Una estructura con n > 1 en un rayo de coeficiente b <= 1 deja a D/n una
    capacidad n*b - n + 1 <= b, así que queda dominada por la trivial (que se
    recorre primero) y se descarta sin resolver programas: el mínimo siempre
    sale de la estructura trivial.

    Returns:
        ComplexityReport: Mínimo, testigo y cotas usadas
    """
    cotas = {**COTAS_POR_DEFECTO, **(cotas or {})}
    rho_x = picard_rank(P.base)
    generadores = generadores_de_moduli(P, cotas["multiplo_moduli"], cotas["cota_soporte_generador"])

    mejor = (Fraction(DIMENSION), 0, Decomposition())
    mejor_absoluto = None
    norma_clasica = Fraction(0)
    capacidades_vistas = []
    evaluados = 0

    for orbifold in _estructuras_orbifold(P, cotas["indice_orbifold"]):
        direcciones = {}
        candidatos = _candidatos(P, orbifold, generadores, direcciones)
        capacidades = {c.rayo: c.capacidad for c in candidatos if c.tipo == "borde"}
        if any(all(capacidades.get(v, 0) <= otra.get(v, 0) for v in capacidades)
               for otra in capacidades_vistas):
            logger.debug("Estructura orbifold dominada: %s", orbifold)
            continue
        capacidades_vistas.append(capacidades)
        if not candidatos:
            if orbifold.es_trivial():
                mejor_absoluto = mejor
            continue

        lista_direcciones = list(direcciones)
        bordes = [c for c in candidatos if c.tipo == "borde"]
        modulis = [c for c in candidatos if c.tipo == "moduli"]
        norma_total, S_total = max_norm_lp(P, [c.divisor for c in bordes], [c.divisor for c in modulis], orbifold)
        norma_moduli = max_norm_lp(P, [], [c.divisor for c in modulis], orbifold)[0] if modulis else Fraction(0)
        evaluados += 1
        if orbifold.es_trivial():
            norma_clasica = norma_total
        mejor_local = (Fraction(DIMENSION), 0, Decomposition(orbifold=orbifold))
        r_total = rho_sigma(S_total)
        if _mejora((DIMENSION + r_total - norma_total, r_total), mejor_local):
            mejor_local = (DIMENSION + r_total - norma_total, r_total, S_total)

        rango_total = span_rank([
            c.divisor if c.tipo == "borde" else _empuja(c.divisor) for c in candidatos
        ])
        for rango, planos in _planos_por_rango(lista_direcciones, rango_total):
            umbral = min(mejor_local[0], mejor[0])
            if DIMENSION + rango - (sum(c.capacidad for c in bordes) + norma_moduli) > umbral:
                break
            for miembros, _ in planos:
                en_plano_b = [c for c in bordes if c.direccion in miembros]
                en_plano_m = [c for c in modulis if c.direccion in miembros]
                cota_inferior = DIMENSION + rango - (
                    sum(c.capacidad for c in en_plano_b) + (norma_moduli if en_plano_m else 0)
                )
                if cota_inferior > min(mejor_local[0], mejor[0]):
                    continue
                norma_plano, S = max_norm_lp(
                    P, [c.divisor for c in en_plano_b], [c.divisor for c in en_plano_m], orbifold
                )
                evaluados += 1
                r = rho_sigma(S)
                valor = DIMENSION + r - norma_plano
                if _mejora((valor, r), mejor_local):
                    mejor_local = (valor, r, S)

        if orbifold.es_trivial():
            mejor_absoluto = mejor_local
        if _mejora(mejor_local, mejor):
            mejor = mejor_local

    valor, r, S = mejor
    logger.debug("search_min_complexity: %s (rango %s, %s programas)", valor, r, evaluados)
    return ComplexityReport(
        norma=norm(S), rango_span=r, picard=rho_x,
        valor_orbifold=valor,
        valor_clasico=DIMENSION + rho_x - norma_clasica,
        variante=ORBIFOLD, testigo=S,
        valor_absoluto=mejor_absoluto[0] if mejor_absoluto else Fraction(DIMENSION),
        cotas=dict(cotas), evaluados=evaluados,
    )


# --- Complejidad en P^1 tras adjunción ---

def line_complexity(pareja):
    """
    Complejidad orbifold del par adjunto en P^1: los dos puntos fijos y una
    componente de moduli de grado 1 con peso igual al grado de M_S.
    """
    norma = sum((c for c in pareja.coeficientes if c > 0), Fraction(0))
    if pareja.grado_moduli > 0:
        norma += pareja.grado_moduli
    rango = 1 if norma > 0 else 0
    return 1 + rango - norma


# --- Cota de contracción de curvas ---

def curve_contraction_bound(P, rho, cotas=None):
    """
    Norma máxima de una descomposición cuyas componentes cortan positivamente a
    la curva contraíble D_rho y no la contienen.
    """
    cotas = {**COTAS_POR_DEFECTO, **(cotas or {})}
    rho = vector(rho)
    if rho not in P.base.rays or not is_removable(P.base, rho):
        raise ErrorComplejidad(f"D({rho}) no es contraíble en {P.base}")
    C = toric_divisor(P.base, {rho: 1})
    bordes = [
        toric_divisor(P.base, {v: 1}) for v, b in P.boundary.items()
        if b > 0 and v != rho and intersect(toric_divisor(P.base, {v: 1}), C) > 0
    ]
    modulis = [
        M for M in generadores_de_moduli(P, cotas["multiplo_moduli"], cotas["cota_soporte_generador"])
        if intersect(_empuja(M), C) > 0 and _empuja(M).support() != [rho]
    ]
    return max_norm_lp(P, bordes, modulis)[0]


# --- Kobayashi-Ochiai ---

AMPLIO = "ample"
GRANDE_NEF = "big_nef"


def kobayashi_ochiai_bound(X, kind=AMPLIO, forced_class=None, cota_coeficiente=3):
    """
    Máximo de sum lambda_i con -K_X ~_Q sum lambda_i M_i, M_i Cartier ampli
    (o grandes y nef), enumerando divisores con coeficientes en [0, cota].

    Returns:
        tuple: (valor máximo o None si no hay descomposición, [(M_i, lambda_i)])
    """
    if kind not in (AMPLIO, GRANDE_NEF):
        raise ErrorComplejidad(f"Tipo de componente desconocido: {kind}")
    clases = {}
    for coeficientes in itertools.product(range(cota_coeficiente + 1), repeat=len(X.rays)):
        D = ToricDivisor(X, coeficientes)
        if not is_cartier(D):
            continue
        if kind == AMPLIO and not is_ample(D):
            continue
        if kind == GRANDE_NEF and not is_big(D):
            continue
        if forced_class is not None and not linear_equivalent(D, forced_class):
            continue
        clave = class_of(D).coords
        if clave not in clases:
            clases[clave] = D
    if not clases:
        return None, []
    objetivo = class_of(-canonical_divisor(X)).coords
    componentes = list(clases.values())
    filas = [[clave[k] for clave in clases] for k in range(len(objetivo))]
    resultado = resolver_lp([1] * len(componentes), filas_eq=filas, b_eq=list(objetivo), maximizar=True)
    if not resultado.es_optimo:
        return None, []
    return resultado.valor, [(D, l) for D, l in zip(componentes, resultado.x) if l > 0]


# --- Sistemas de factibilidad de los casos tóricos ---

VARIABLES_SISTEMA = ("Lambda", "A", "B", "M", "C", "alfa")


@dataclass
class ResultadoFactibilidad:
    """Decisión exacta de un sistema de factibilidad; certificado si es infactible"""
    fixture: str
    factible: bool
    alfa_min: Fraction = None
    alfa_max: Fraction = None
    testigo: dict = None
    componentes: dict = None
    certificado: list = None
    certificado_valido: bool = False
    sistema: dict = None


def coordenadas_en_base(D, base):
    """Coeficientes x con clase(D) = sum x_i clase(base_i); None si no está en el span"""
    A = matriz_sympy([class_of(B).coords for B in base]).T
    b = matriz_sympy([class_of(D).coords]).T
    try:
        solucion, parametros = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    if parametros.shape[0] != 0:
        solucion = solucion.subs({p: 0 for p in parametros})
    return [_a_fraction(sympy.Rational(x)) for x in solucion]


def armar_sistema(datos, alpha=None):
    """
    Filas del sistema agregado en las variables (Lambda, A, B, M, C, alfa).
    Lambda = sum lambda_i, A = sum lambda_i a_i, B = sum lambda_i b_i,
    M = sum mu_i, C = sum mu_i c_i.
    """
    total = Fraction(datos["total"])
    mult = Fraction(datos["multiplicador"])
    pendiente = Fraction(datos["pendiente"])
    filas_eq = [
        [1, 0, 0, 1, 0, 0],
        [0, mult, 0, 0, 0, 1],
        [0, 0, mult, 0, mult, 0],
    ]
    b_eq = [total, Fraction(datos["rhs_C0"]), Fraction(datos["rhs_f"])]
    if alpha is not None:
        filas_eq.append([0, 0, 0, 0, 0, 1])
        b_eq.append(Fraction(alpha))
    filas_le = [
        [1, -1, 0, 0, 0, 0],
        [0, pendiente, -1, 0, 0, 0],
        [0, 0, 0, 1, -1, 0],
        [0, 0, 0, 0, 0, 1],
    ]
    b_le = [0, 0, 0, 1]
    return {"filas_le": filas_le, "b_le": b_le, "filas_eq": filas_eq, "b_eq": b_eq}


def _pesos_binarios(t):
    return [(0, 1 - t), (1, t)]


def realizar_testigo(punto, pendiente):
    """
    Componentes enteras explícitas para un punto agregado factible:
    lambda-componentes a C0 + b f con a >= 1, b >= pendiente * a, y mu-componentes c f con c >= 1.

    Returns:
        dict o None: {"lambda": [(a, b, peso)], "mu": [(c, peso)]}
    """
    Lam, A, B, M, C = (punto[k] for k in VARIABLES_SISTEMA[:5])
    lambdas, mus = [], []
    if Lam == 0:
        if A != 0 or B != 0:
            return None
    else:
        a = A / Lam
        s = B / Lam - pendiente * a
        a0, s0 = math.floor(a), math.floor(s)
        for i, wi in _pesos_binarios(a - a0):
            for j, wj in _pesos_binarios(s - s0):
                peso = Lam * wi * wj
                if peso > 0:
                    lambdas.append((a0 + i, pendiente * (a0 + i) + s0 + j, peso))
    if M == 0:
        if C != 0:
            return None
    else:
        c = C / M
        c0 = math.floor(c)
        for i, wi in _pesos_binarios(c - c0):
            if M * wi > 0:
                mus.append((c0 + i, M * wi))
    if any(a < 1 for a, _, _ in lambdas) or any(c < 1 for c, _ in mus):
        return None
    if sum(p for _, _, p in lambdas) != Lam or sum(a * p for a, _, p in lambdas) != A \
            or sum(b * p for _, b, p in lambdas) != B or sum(p for _, p in mus) != M \
            or sum(c * p for c, p in mus) != C:
        return None
    return {"lambda": lambdas, "mu": mus}


def feasibility_system(datos, alpha=None):
    """
    Decide el sistema de un caso. Con alpha libre devuelve el intervalo factible de alfa.

    Args:
        datos: dict con id, total, multiplicador, pendiente, rhs_C0, rhs_f
        alpha: Racional fijo o None

    Returns:
        ResultadoFactibilidad
    """
    for clave in ("total", "multiplicador", "pendiente", "rhs_C0", "rhs_f"):
        if clave not in datos:
            raise ErrorComplejidad(f"Sistema incompleto: falta '{clave}'")
    sistema = armar_sistema(datos, alpha)
    identificador = datos.get("id", "?")
    objetivo_alfa = [0, 0, 0, 0, 0, 1]
    maximo = resolver_lp(objetivo_alfa, sistema["filas_le"], sistema["b_le"],
                         sistema["filas_eq"], sistema["b_eq"], maximizar=True)
    if not maximo.es_factible:
        valido = verificar_certificado(maximo.certificado, sistema["filas_le"], sistema["b_le"],
                                       sistema["filas_eq"], sistema["b_eq"])
        logger.debug("Sistema %s infactible; certificado válido: %s", identificador, valido)
        return ResultadoFactibilidad(fixture=identificador, factible=False,
                                     certificado=maximo.certificado, certificado_valido=valido,
                                     sistema=sistema)
    minimo = resolver_lp(objetivo_alfa, sistema["filas_le"], sistema["b_le"],
                         sistema["filas_eq"], sistema["b_eq"], maximizar=False)
    punto = dict(zip(VARIABLES_SISTEMA, maximo.x))
    if not verificar_solucion(maximo.x, sistema["filas_le"], sistema["b_le"],
                              sistema["filas_eq"], sistema["b_eq"]):
        raise ErrorComplejidad(f"El vértice de {identificador} no satisface el sistema")
    return ResultadoFactibilidad(
        fixture=identificador, factible=True,
        alfa_min=minimo.valor, alfa_max=maximo.valor,
        testigo=punto,
        componentes=realizar_testigo(punto, Fraction(datos["pendiente"])),
        sistema=sistema,
    )
