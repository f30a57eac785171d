"""
Módulo de verificación
Pipelines de los casos tóricos, suites de propiedades sobre abanicos
enumerados y la verificación completa en orden fijo
"""
import copy
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from utils.complexity import (
    AMPLIO, GRANDE_NEF, complexity, coordenadas_en_base, curve_contraction_bound,
    feasibility_system, kobayashi_ochiai_bound, line_complexity, norm, search_min_complexity,
)
from utils.configuracion import CONFIGURACION_POR_DEFECTO, fusionar
from utils.divisor import (
    ToricDivisor, borde_torico, canonical_divisor, divisor_primo, intersect, intersection_matrix,
    is_big, is_cartier, is_nef, is_torsion, linear_equivalent, matriz_sympy, principal_divisor,
    pullback, pushforward, toric_divisor,
)
from utils.errores import ErrorMmp, ErrorPar, ErrorTorico, ErrorVerificacion
from utils.fan import (
    abanico_fn, abanico_hirzebruch, abanico_p1xp1, abanico_p2, enumerate_fans,
    hirzebruch_index, is_Fn, is_P2, is_removable, lattice_equivalent, minimal_resolution,
    picard_rank, star_subdivision, vectores_primitivos,
)
from utils import fixtures
from utils.genpair import (
    CREPANTE, adjunction_to_invariant_curve, crepant_rays, generalized_pair, is_glc,
    is_gklt, is_glcy, log_canonical_divisor, log_discrepancy,
)
from utils.lattice import LatticeVector, formatear_racional, vector
from utils.mmp import (
    TERMINAL_MFS, TERMINAL_RHO1, is_canonical, rho1_noncanonical_model,
    rho2_intermediate_model, run_k_mmp,
)

logger = logging.getLogger(__name__)

CITADO = "PAPER"
DERIVADO = "DERIVED"
TRIVIAL = "TRIVIAL"

PASS = "PASS"
FAIL = "FAIL"

CASOS_HIRZEBRUCH = tuple(f"3.2-{n}" for n in range(1, 11))
ORDEN_COMPLETO = CASOS_HIRZEBRUCH + (
    "4.1", "4.2", "4.3", "theorem31", "canonical", "ko", "examples", "lemmas", "oracles",
)


@dataclass
class SubCheck:
    """Un chequeo con valor esperado y calculado como textos exactos"""
    nombre: str
    esperado: str
    calculado: str
    procedencia: str
    ok: bool
    informativo: bool = False
    contraejemplo: object = None

    def a_dict(self):
        datos = {
            "nombre": self.nombre,
            "esperado": self.esperado,
            "calculado": self.calculado,
            "procedencia": self.procedencia,
            "ok": self.ok,
            "informativo": self.informativo,
        }
        if self.contraejemplo is not None:
            datos["contraejemplo"] = self.contraejemplo
        return datos


@dataclass
class VerificationResult:
    caso: str
    subchecks: list = field(default_factory=list)
    tiempo: float = None

    @property
    def estado(self):
        return PASS if all(c.ok for c in self.subchecks if not c.informativo) else FAIL

    @property
    def contraejemplo(self):
        """Contraejemplo del primer chequeo fallido (o su nombre)"""
        for chequeo in self.subchecks:
            if not chequeo.informativo and not chequeo.ok:
                return chequeo.contraejemplo or {"chequeo": chequeo.nombre}
        return None

    def a_dict(self, incluir_tiempo=False):
        datos = {
            "caso": self.caso,
            "estado": self.estado,
            "subchecks": [c.a_dict() for c in self.subchecks],
        }
        if self.estado == FAIL:
            datos["contraejemplo"] = self.contraejemplo
        if incluir_tiempo:
            datos["tiempo"] = self.tiempo
        return datos


def _texto(valor):
    if isinstance(valor, Fraction):
        return formatear_racional(valor)
    if isinstance(valor, bool):
        return "sí" if valor else "no"
    if isinstance(valor, (list, tuple)):
        return "[" + ", ".join(_texto(v) for v in valor) + "]"
    if isinstance(valor, LatticeVector):
        return f"({valor})"
    if valor is None:
        return "-"
    return str(valor)


def _chequeo(nombre, esperado, calculado, procedencia, ok=None, informativo=False, contraejemplo=None):
    if ok is None:
        ok = esperado == calculado
    return SubCheck(nombre=nombre, esperado=_texto(esperado), calculado=_texto(calculado),
                    procedencia=procedencia, ok=bool(ok), informativo=informativo,
                    contraejemplo=contraejemplo)


def _config(config):
    return fusionar(CONFIGURACION_POR_DEFECTO, config or {})


def _rayos(lista):
    return sorted(vector(r) for r in lista)


def _cronometrar(caso, funcion):
    inicio = time.perf_counter()
    subchecks = funcion()
    resultado = VerificationResult(caso=caso, subchecks=subchecks, tiempo=time.perf_counter() - inicio)
    logger.info("Verificación %s: %s (%.2f s)", caso, resultado.estado, resultado.tiempo)
    return resultado


# --- Casos ---

def _chequeos_sistema(datos, intervalo=None):
    """Decisión del sistema: intervalo de alfa y testigo, o certificado de infactibilidad"""
    chequeos = []
    resultado = feasibility_system(datos)
    if intervalo is None:
        chequeos.append(_chequeo("sistema infactible", "infactible",
                                 "factible" if resultado.factible else "infactible", CITADO))
        chequeos.append(_chequeo("certificado de Farkas válido", True, resultado.certificado_valido,
                                 DERIVADO, contraejemplo={"certificado": _texto(resultado.certificado)}))
        return chequeos
    if not resultado.factible:
        chequeos.append(_chequeo("intervalo de alfa", list(intervalo), "infactible", CITADO, ok=False))
        return chequeos
    chequeos.append(_chequeo("intervalo de alfa", list(intervalo),
                             [resultado.alfa_min, resultado.alfa_max], CITADO))
    chequeos.append(_chequeo("testigo con componentes enteras", True,
                             resultado.componentes is not None, DERIVADO,
                             contraejemplo={"punto": {k: _texto(v) for k, v in resultado.testigo.items()}}))
    return chequeos


def _caso_hirzebruch(n):
    chequeos = []
    X = abanico_fn(n)
    Y = abanico_hirzebruch(n)
    soplado = star_subdivision(X, (0, 1))[0]
    chequeos.append(_chequeo("blow-up de F_n en (0,1) = Sigma_n", list(Y.rays), list(soplado.rays), CITADO))
    if n >= 2:
        resolucion = minimal_resolution(X)[0]
        chequeos.append(_chequeo("resolución mínima de F_n", list(Y.rays), list(resolucion.rays), CITADO))

    C0 = divisor_primo(Y, (0, 1))
    f = divisor_primo(Y, (1, 0))
    objetivo = 2 * C0 + (n + 2) * f
    chequeos.append(_chequeo("-K ~ 2C0 + (n+2)f", True,
                             linear_equivalent(-canonical_divisor(Y), objetivo), CITADO))

    # aC0 + bf es nef si y solo si b >= n*a
    fallas = [(a, b) for a in range(6) for b in range(6) if is_nef(a * C0 + b * f) != (b >= n * a)]
    chequeos.append(_chequeo("nef: b >= n*a en [0,5]x[0,5]", 0, len(fallas), CITADO,
                             contraejemplo={"fallas": [list(p) for p in fallas]} if fallas else None))

    datos = fixtures.sistema_hirzebruch(n)
    intervalo = (Fraction(1), Fraction(1)) if n >= 2 else (Fraction(0), Fraction(1))
    chequeos.extend(_chequeos_sistema(datos, intervalo))
    if n >= 2:
        medio = feasibility_system(datos, Fraction(1, 2))
        chequeos.append(_chequeo("alfa = 1/2 infactible", "infactible",
                                 "factible" if medio.factible else "infactible", CITADO))
        chequeos.append(_chequeo("certificado para alfa = 1/2", True, medio.certificado_valido, DERIVADO))
    return chequeos


def _caso_toro(identificador, config):
    datos = fixtures.caso(identificador)
    informativos = set(datos.get("informativos", []))
    X = fixtures.abanico_de(datos["fan"])
    Y, pi = minimal_resolution(X)
    chequeos = [_chequeo("resolución mínima", _rayos(datos["resolucion"]), sorted(Y.rays), CITADO)]

    for nombre in ("Z1", "Z2"):
        Z = fixtures.abanico_de(datos[nombre])
        chequeos.append(_chequeo(f"{nombre} es P^2", True, is_P2(Z), CITADO,
                                 informativo="zs_p2" in informativos))
        chequeos.append(_chequeo(f"rayos de {nombre} en Y", True,
                                 all(v in Y.rays for v in Z.rays), CITADO))
    sobreviven = set(fixtures.abanico_de(datos["Z1"]).rays) | set(fixtures.abanico_de(datos["Z2"]).rays)
    faltan = [v for v in _rayos(datos["sobrevivientes"]) if v not in sobreviven]
    chequeos.append(_chequeo("rayos excepcionales sobreviven en Z1 o Z2", [], faltan, CITADO,
                             informativo="sobrevivientes" in informativos))
    chequeos.append(_chequeo("X canónica", True, is_canonical(X), CITADO))

    if identificador == "4.1":
        crepantes = sorted(v for v, marca in crepant_rays(generalized_pair(X), Y) if marca == CREPANTE)
        chequeos.append(_chequeo("rayos crepantes = excepcionales", sorted(pi.exceptional_rays),
                                 crepantes, DERIVADO))
        valor, _ = kobayashi_ochiai_bound(X, AMPLIO,
                                          cota_coeficiente=config["kobayashi_ochiai"]["cota_coeficiente"])
        esperado = Fraction(datos["cota_ko"])
        chequeos.append(_chequeo("máximo amplio-Cartier en X", esperado, valor, DERIVADO))
        chequeos.append(_chequeo("máximo < 3 (contradicción)", True, valor is not None and valor < 3, CITADO))
        return chequeos

    Z = fixtures.abanico_de(datos["Z"])
    chequeos.append(_chequeo("Z refina X", True, all(v in Z.rays for v in X.rays), CITADO))
    chequeos.append(_chequeo("rayos de Z en Y", True, all(v in Y.rays for v in Z.rays), CITADO))
    if "Z_literal" in datos:
        literal = fixtures.abanico_de(datos["Z_literal"])
        chequeos.append(_chequeo("Z literal refina X", True, all(v in literal.rays for v in X.rays),
                                 CITADO, informativo=True))

    C0 = divisor_primo(Z, datos["C0"])
    f = divisor_primo(Z, datos["f"])
    sistema = datos["sistema"]
    coordenadas = coordenadas_en_base(-canonical_divisor(Z), [C0, f])
    esperadas = [Fraction(sistema["rhs_C0"]), Fraction(sistema["rhs_f"])]
    chequeos.append(_chequeo("-K_Z en la base (C0, f)", esperadas, coordenadas, CITADO,
                             informativo="anticanonico_Z" in informativos))

    # lattice nef-Cartier citado: 2aC0 + 2bf con b >= k*a
    k = datos["pendiente_nef"]
    distintos = []
    for x in range(7):
        for y in range(7):
            D = x * C0 + y * f
            calculado = is_cartier(D) and is_nef(D)
            citado = x % 2 == 0 and y % 2 == 0 and y // 2 >= k * (x // 2)
            if calculado != citado:
                distintos.append([x, y])
    chequeos.append(_chequeo("lattice nef-Cartier citado en [0,6]^2", 0, len(distintos), CITADO,
                             informativo=True))

    chequeos.extend(_chequeos_sistema(sistema))
    return chequeos


def verify_case(identificador, config=None):
    """
    Verifica un caso: "3.2-n" (n en [1, 10]), "4.1", "4.2" o "4.3".

    Raises:
        ErrorVerificacion: Si el identificador no existe
    """
    config = _config(config)
    if identificador.startswith("3.2-"):
        try:
            n = int(identificador.split("-", 1)[1])
        except ValueError:
            raise ErrorVerificacion(f"Caso desconocido: {identificador}")
        if not 1 <= n <= 10:
            raise ErrorVerificacion(f"n fuera de rango en {identificador}; se admite 1 <= n <= 10")
        return _cronometrar(identificador, lambda: _caso_hirzebruch(n))
    if identificador not in fixtures.CASOS:
        raise ErrorVerificacion(f"Caso desconocido: {identificador}")
    return _cronometrar(identificador, lambda: _caso_toro(identificador, config))


# --- Teorema de complejidad no negativa ---

def _es_modelo_toroidal(X):
    return is_P2(X) or hirzebruch_index(X) == 0 or is_Fn(X) is not None


def _cotas_teorema(config):
    return {
        "indice_orbifold": config["teorema31"]["indice_orbifold"],
        "multiplo_moduli": config["busqueda"]["multiplo_moduli"],
        "cota_soporte_generador": config["teorema31"]["cota_soporte_generador"],
    }


def _falla_inyectada(X):
    """Borde con un coeficiente 3/2: el par debe rechazarse"""
    coeficientes = {v: 1 for v in X.rays}
    coeficientes[X.rays[0]] = Fraction(3, 2)
    try:
        generalized_pair(X, toric_divisor(X, coeficientes))
    except ErrorPar as e:
        return str(e)
    return None


def _piso_no_torico(P):
    """Motivo por el que (X, piso de B) no es un par tórico, o None"""
    X = P.base
    piso = toric_divisor(X, {v: 1 for v, b in P.boundary.items() if b >= 1})
    if not piso <= borde_torico(X):
        return f"{piso} no está bajo el borde tórico de {X}"
    if not is_glc(generalized_pair(X, piso)):
        return f"({X}, {piso}) no es lc"
    return None


def verify_theorem31(cota_coordenadas=None, cota_rayos=None, cota_denominador=None, config=None,
                     falla_inyectada=False):
    """
    Suite de propiedades: sobre todos los abanicos enumerados y la familia de
    pares gLCY, la complejidad buscada es >= 0 y en cada cero las componentes
    generan N^1(X). También controla que el borde entero sea invariante, que
    los ceros con B = 0 vivan en P^2, P^1 x P^1 o F_n (gklt: P^2 o P^1 x P^1)
    y la cota |S| <= 2 para curvas contraíbles.
    """
    config = _config(config)
    busqueda = config["busqueda"]
    cota_coordenadas = cota_coordenadas or busqueda["cota_coordenadas"]
    cota_rayos = cota_rayos or busqueda["cota_rayos"]
    cota_denominador = cota_denominador or busqueda["cota_denominador"]
    cotas = _cotas_teorema(config)

    def ejecutar():
        abanicos = enumerate_fans(cota_coordenadas, cota_rayos)
        instancias, ceros = 0, 0
        negativos, sin_span, no_toroidales, contraccion, piso_no_torico = [], [], [], [], []
        rechazo = None
        for X in abanicos:
            if falla_inyectada and rechazo is None:
                rechazo = _falla_inyectada(X) or "aceptado"
            pares = fixtures.familia_glcy(
                X, cota_denominador, config["teorema31"]["cota_soporte_generador"],
                config["teorema31"]["generadores_por_abanico"],
            )
            for nombre, P in pares:
                instancias += 1
                if not is_glcy(P):
                    negativos.append({"fan": str(X), "par": nombre, "motivo": "no es gLCY"})
                    continue
                reporte = search_min_complexity(P, cotas)
                valor = reporte.valor_orbifold
                if valor < 0:
                    negativos.append({"fan": str(X), "par": nombre, "valor": _texto(valor)})
                if valor == 0:
                    ceros += 1
                    if reporte.rango_span != reporte.picard:
                        sin_span.append({"fan": str(X), "par": nombre,
                                         "rango": reporte.rango_span, "picard": reporte.picard})
                    motivo = _piso_no_torico(P)
                    if motivo:
                        piso_no_torico.append({"fan": str(X), "par": nombre, "motivo": motivo})
                    if P.boundary.is_zero():
                        if is_gklt(P):
                            toroidal = is_P2(X) or hirzebruch_index(X) == 0
                        else:
                            toroidal = _es_modelo_toroidal(X)
                        if not toroidal:
                            no_toroidales.append({"fan": str(X), "par": nombre})
                for v in X.rays:
                    if is_removable(X, v):
                        cota = curve_contraction_bound(P, v, cotas)
                        if cota > 2:
                            contraccion.append({"fan": str(X), "par": nombre, "rayo": str(v),
                                                "norma": _texto(cota)})
        logger.info("theorem31: %s abanicos, %s pares, %s ceros", len(abanicos), instancias, ceros)

        chequeos = [
            _chequeo("instancias evaluadas", "> 0", instancias, DERIVADO, ok=instancias > 0),
            _chequeo("complejidad >= 0", 0, len(negativos), CITADO,
                     contraejemplo=negativos[0] if negativos else None),
            _chequeo("testigos de complejidad cero", ">= 1", ceros, TRIVIAL, ok=ceros >= 1),
            _chequeo("span = N^1(X) en cada cero", 0, len(sin_span), CITADO,
                     contraejemplo=sin_span[0] if sin_span else None),
            _chequeo("(X, piso de B) tórico en cada cero", 0, len(piso_no_torico), CITADO,
                     contraejemplo=piso_no_torico[0] if piso_no_torico else None),
            _chequeo("ceros con B = 0 en P^2, P^1xP^1 o F_n", 0, len(no_toroidales), CITADO,
                     contraejemplo=no_toroidales[0] if no_toroidales else None),
            _chequeo("|S| <= 2 en curvas contraíbles", 0, len(contraccion), CITADO,
                     contraejemplo=contraccion[0] if contraccion else None),
        ]
        if falla_inyectada:
            chequeos.append(_chequeo("par con coeficiente 3/2", "aceptado", rechazo, TRIVIAL,
                                     contraejemplo={"rechazo": rechazo}))
        return chequeos

    return _cronometrar("theorem31", ejecutar)


# --- Censo de superficies canónicas de rango 1 ---

def verify_canonical_rho1(cota_coordenadas=None, config=None):
    """Clases de abanicos canónicos de 3 rayos dentro de la caja, contra los cinco conocidos"""
    config = _config(config)
    cota = cota_coordenadas or config["censo"]["cota_coordenadas"]

    def ejecutar():
        conocidos = fixtures.canonicos_rho1()
        canonicos = [X for X in enumerate_fans(cota, 3) if len(X) == 3 and is_canonical(X)]
        encontrados, desconocidos = set(), []
        for X in canonicos:
            nombre = next((k for k, F in conocidos.items() if lattice_equivalent(X, F)[0]), None)
            if nombre is None:
                desconocidos.append(str(X))
            else:
                encontrados.add(nombre)
        completo = cota >= 3
        return [
            _chequeo("clases canónicas de rango 1", 5, len(canonicos), CITADO, informativo=not completo),
            _chequeo("clases fuera de las cinco conocidas", [], desconocidos, DERIVADO,
                     contraejemplo={"abanicos": desconocidos} if desconocidos else None),
            _chequeo("clases conocidas encontradas", sorted(conocidos), sorted(encontrados), CITADO,
                     informativo=not completo),
        ]

    return _cronometrar("canonical", ejecutar)


# --- Kobayashi-Ochiai ---

def verify_kobayashi_ochiai(config=None):
    """Máximo de sum lambda sobre descomposiciones de -K en P^2 y en los casos que lo obstruyen"""
    config = _config(config)
    cota = config["kobayashi_ochiai"]["cota_coeficiente"]

    def ejecutar():
        chequeos = []
        P2 = abanico_p2()
        H = divisor_primo(P2, (1, 0))
        valor, componentes = kobayashi_ochiai_bound(P2, AMPLIO, cota_coeficiente=cota)
        chequeos.append(_chequeo("P^2: máximo amplio-Cartier", Fraction(3), valor, CITADO))
        chequeos.append(_chequeo("P^2: componentes ~ H", True,
                                 bool(componentes) and all(linear_equivalent(D, H) for D, _ in componentes),
                                 CITADO))
        forzado, _ = kobayashi_ochiai_bound(P2, AMPLIO, forced_class=2 * H, cota_coeficiente=cota)
        chequeos.append(_chequeo("P^2 con componentes ~ 2H", Fraction(3, 2), forzado, TRIVIAL))

        Q = abanico_p1xp1()
        f1 = divisor_primo(Q, (1, 0))
        f2 = divisor_primo(Q, (0, 1))
        chequeos.append(_chequeo("-K ~ 2f1 + 2f2 en P^1xP^1", True,
                                 linear_equivalent(-canonical_divisor(Q), 2 * f1 + 2 * f2), CITADO))
        grande, _ = kobayashi_ochiai_bound(Q, GRANDE_NEF, cota_coeficiente=cota)
        chequeos.append(_chequeo("P^1xP^1: máximo grande-nef", Fraction(2), grande, DERIVADO))
        sigma1, _ = kobayashi_ochiai_bound(abanico_hirzebruch(1), GRANDE_NEF, cota_coeficiente=cota)
        chequeos.append(_chequeo("Sigma_1: máximo grande-nef", Fraction(2), sigma1, DERIVADO))
        X41 = fixtures.abanico_de(fixtures.caso("4.1")["fan"])
        v41, _ = kobayashi_ochiai_bound(X41, AMPLIO, cota_coeficiente=cota)
        chequeos.append(_chequeo("caso 4.1: máximo amplio-Cartier",
                                 Fraction(fixtures.caso("4.1")["cota_ko"]), v41, DERIVADO))

        chequeos.extend(_chequeos_no_desciende())
        return chequeos

    return _cronometrar("ko", ejecutar)


def _chequeos_no_desciende():
    datos = fixtures.cargar_ejemplos()["no_desciende"]
    P = fixtures.par_no_desciende()
    S = fixtures.descomposicion_no_desciende(P)
    Y = P.moduli.model
    L = divisor_primo(Y, datos["L"])
    E = divisor_primo(Y, datos["E"])
    regreso = pullback(pushforward(L, P.moduli.morphism), P.moduli.morphism)
    return [
        _chequeo("no desciende: |S|", Fraction(datos["norma_esperada"]), norm(S), CITADO),
        _chequeo("no desciende: gklt", True, is_gklt(P), CITADO),
        _chequeo("no desciende: gLCY", True, is_glcy(P), CITADO),
        _chequeo("no desciende: pi^* pi_* L = L + E", str(L + E), str(regreso), CITADO),
        _chequeo("no desciende: pi^* pi_* L != L", True, regreso != L, CITADO),
    ]


# --- Ejemplos ---

def verify_examples(config=None):
    """Reconstruye los ejemplos de F_n y del divisor que no desciende a P^2"""
    config = _config(config)
    cotas = {"indice_orbifold": config["busqueda"]["indice_orbifold"],
             "multiplo_moduli": config["busqueda"]["multiplo_moduli"]}

    def ejecutar():
        chequeos = []
        datos = fixtures.cargar_ejemplos()
        norma_fn = Fraction(datos["fn"]["norma_esperada"])
        cero = Fraction(datos["fn"]["complejidad_esperada"])
        for n in datos["fn"]["n"]:
            P = fixtures.par_ejemplo_fn(n)
            S = fixtures.descomposicion_fn(P, n)
            Y = P.moduli.model
            chequeos.append(_chequeo(f"F_{n}: gLCY", True, is_glcy(P), CITADO))
            chequeos.append(_chequeo(f"F_{n}: glc", True, is_glc(P), CITADO))
            chequeos.append(_chequeo(f"F_{n}: gklt", False, is_gklt(P), CITADO))
            chequeos.append(_chequeo(f"F_{n}: |S|", norma_fn, norm(S), CITADO))
            chequeos.append(_chequeo(f"F_{n}: complejidad de S", cero, complexity(P, S).valor_orbifold, CITADO))
            chequeos.append(_chequeo(f"F_{n}: complejidad buscada", cero,
                                     search_min_complexity(P, cotas).valor_orbifold, DERIVADO))
            grandes = [is_big(divisor_primo(Y, v)) for v in ((1, 0), (-1, n), (0, -1))]
            chequeos.append(_chequeo(f"F_{n}: F0, F1, S1 grandes", [False, False, True], grandes, CITADO))

        P = fixtures.par_no_desciende()
        ejemplo = datos["no_desciende"]
        chequeos.extend(_chequeos_no_desciende())
        chequeos.append(_chequeo("no desciende: complejidad de S", Fraction(ejemplo["complejidad_esperada"]),
                                 complexity(P, fixtures.descomposicion_no_desciende(P)).valor_orbifold, CITADO))
        chequeos.append(_chequeo("no desciende: complejidad buscada", Fraction(ejemplo["complejidad_esperada"]),
                                 search_min_complexity(P, cotas).valor_orbifold, DERIVADO))
        return chequeos

    return _cronometrar("examples", ejecutar)


# --- Lemas constructivos ---

def _chequear_traza(X):
    traza = run_k_mmp(X)
    anterior = X
    for paso in traza.pasos:
        if paso.k_interseccion >= 0 or not all(v in anterior.rays for v in paso.abanico.rays):
            return False
        anterior = paso.abanico
    if traza.terminal == TERMINAL_RHO1:
        return picard_rank(traza.final) == 1
    return traza.terminal == TERMINAL_MFS and bool(traza.mfs)


def _chequear_rho2(X):
    """Lista de problemas del modelo intermedio de rango 2 (vacía si cumple)"""
    modelo = rho2_intermediate_model(X)
    if lattice_equivalent(X, abanico_p1xp1())[0]:
        return [] if modelo is None else ["P^1xP^1 no se excluyó"], None
    problemas = []
    if len(modelo.extraidos) > 1:
        problemas.append("extrae más de un divisor")
    if not all(v in modelo.Y.rays for v in X.rays):
        problemas.append("Y no refina X")
    if picard_rank(modelo.Z) != 1 or not all(v in modelo.Y.rays for v in modelo.Z.rays):
        problemas.append("Z no es una contracción de Y a rango 1")
    if modelo.excepcional is not None:
        a = log_discrepancy(generalized_pair(X), modelo.excepcional)
        if not 0 < a <= 1 or a != modelo.discrepancia:
            problemas.append(f"a_E = {a} fuera de (0,1]")
    return problemas, modelo


def _chequear_rho1(X):
    if is_Fn(X) is not None:
        try:
            rho1_noncanonical_model(X)
        except ErrorMmp:
            return [], None
        return ["F_n no se excluyó"], None
    modelo = rho1_noncanonical_model(X)
    problemas = []
    E = modelo.excepcional
    a = log_discrepancy(generalized_pair(X), E)
    if not 0 < a < 1 or a != modelo.discrepancia:
        problemas.append(f"a_E = {a} fuera de (0,1)")
    if E not in modelo.Z.rays:
        problemas.append("Z contrae a E")
    if picard_rank(modelo.Z) != 1:
        problemas.append("Z no tiene rango 1")
    if not all(v in modelo.Y.rays for v in X.rays):
        problemas.append("Y no refina X")
    return problemas, modelo


def verify_constructive_lemmas(cota_rho2=None, cota_rho1=None, config=None):
    """Modelos intermedios de rango 2 y rango 1 no canónico sobre los abanicos enumerados"""
    config = _config(config)
    cota_rho2 = cota_rho2 or config["lemas"]["cota_rho2"]
    cota_rho1 = cota_rho1 or config["lemas"]["cota_rho1"]

    def ejecutar():
        fallas, excluidos, con_a_uno, trazas_malas = [], 0, 0, []
        rango2 = [X for X in enumerate_fans(cota_rho2, 4) if picard_rank(X) == 2]
        for X in rango2:
            try:
                problemas, modelo = _chequear_rho2(X)
            except ErrorTorico as e:
                problemas, modelo = [str(e)], None
            if problemas:
                fallas.append({"lema": "rho2", "fan": str(X), "problemas": problemas})
            elif modelo is None:
                excluidos += 1
            elif modelo.discrepancia == 1:
                con_a_uno += 1
            if not _chequear_traza(X):
                trazas_malas.append(str(X))

        rango1 = [X for X in enumerate_fans(cota_rho1, 3) if len(X) == 3 and not is_canonical(X)]
        for X in rango1:
            try:
                problemas, modelo = _chequear_rho1(X)
            except ErrorTorico as e:
                problemas, modelo = [str(e)], None
            if problemas:
                fallas.append({"lema": "rho1", "fan": str(X), "problemas": problemas})
            elif modelo is None:
                excluidos += 1
        logger.info("lemmas: %s de rango 2, %s de rango 1 no canónicos", len(rango2), len(rango1))
        return [
            _chequeo("abanicos evaluados", "> 0", len(rango2) + len(rango1), DERIVADO,
                     ok=bool(rango2) and bool(rango1)),
            _chequeo("postcondiciones de los lemas", 0, len(fallas), CITADO,
                     contraejemplo=fallas[0] if fallas else None),
            _chequeo("exclusiones (P^1xP^1 y F_n)", "> 0", excluidos, CITADO, ok=excluidos > 0),
            _chequeo("trazas del MMP válidas", [], trazas_malas, DERIVADO,
                     contraejemplo={"abanicos": trazas_malas} if trazas_malas else None),
            _chequeo("extracciones con a_E = 1", "-", con_a_uno, DERIVADO, informativo=True),
        ]

    return _cronometrar("lemmas", ejecutar)


# --- Oráculos numéricos ---

def _divisor_aleatorio(rng, X, cota):
    return ToricDivisor(X, tuple(Fraction(rng.randint(-cota, cota), rng.randint(1, 3)) for _ in X.rays))


def _refinamiento_aleatorio(rng, X, candidatos):
    if not X.is_smooth() and rng.random() < 0.5:
        return minimal_resolution(X)[1]
    libres = [v for v in candidatos if v not in X.rays]
    return star_subdivision(X, rng.choice(libres))[1]


def verify_oracles(config=None):
    """
    Fórmula de proyección en pares aleatorios, identidad de grados de la
    adjunción, pushforward de principales y negatividad de la parte excepcional.
    """
    config = _config(config)
    oraculos = config["oraculos"]

    def ejecutar():
        rng = random.Random(oraculos["semilla"])
        abanicos = enumerate_fans(2, 5)
        candidatos = vectores_primitivos(3)
        proyeccion, empuje = [], []
        for _ in range(oraculos["pares_interseccion"]):
            X = rng.choice(abanicos)
            f = _refinamiento_aleatorio(rng, X, candidatos)
            D1 = _divisor_aleatorio(rng, X, oraculos["cota_coeficiente"])
            D2 = _divisor_aleatorio(rng, X, oraculos["cota_coeficiente"])
            if intersect(pullback(D1, f), pullback(D2, f)) != intersect(D1, D2):
                proyeccion.append({"fan": str(X), "D1": str(D1), "D2": str(D2)})
            m = (rng.randint(-3, 3), rng.randint(-3, 3))
            if pushforward(pullback(D1, f), f) != D1 or not is_torsion(pushforward(principal_divisor(f.source, m), f)):
                empuje.append({"fan": str(X), "D": str(D1), "m": list(m)})

        grados, lineas, adjunciones = [], [], 0
        cotas = _cotas_teorema(config)
        for X in enumerate_fans(1, 4):
            for nombre, P in fixtures.familia_glcy(X, 3, 4, 2):
                valor = search_min_complexity(P, cotas).valor_orbifold
                for v, b in P.boundary.items():
                    if b != 1:
                        continue
                    adjunciones += 1
                    try:
                        pareja, _ = adjunction_to_invariant_curve(P, v)
                    except ErrorPar as e:
                        grados.append({"fan": str(X), "par": nombre, "curva": str(v), "error": str(e)})
                        continue
                    grado = intersect(log_canonical_divisor(P), divisor_primo(X, v))
                    if grado != pareja.grado():
                        grados.append({"fan": str(X), "par": nombre, "curva": str(v)})
                    if line_complexity(pareja) > valor:
                        lineas.append({"fan": str(X), "par": nombre, "curva": str(v)})

        no_negativas = []
        for X in abanicos:
            if X.is_smooth():
                continue
            Y, pi = minimal_resolution(X)
            indices = [Y.index(e) for e in pi.exceptional_rays]
            M = intersection_matrix(Y)
            if not matriz_sympy([[M[i][j] for j in indices] for i in indices]).is_negative_definite:
                no_negativas.append(str(X))

        return [
            _chequeo("fórmula de proyección", 0, len(proyeccion), DERIVADO,
                     contraejemplo=proyeccion[0] if proyeccion else None),
            _chequeo("pushforward de pullback y de principales", 0, len(empuje), DERIVADO,
                     contraejemplo=empuje[0] if empuje else None),
            _chequeo("adjunciones evaluadas", "> 0", adjunciones, DERIVADO, ok=adjunciones > 0),
            _chequeo("identidad de grados en la adjunción", 0, len(grados), CITADO,
                     contraejemplo=grados[0] if grados else None),
            _chequeo("complejidad en la curva <= complejidad de X", 0, len(lineas), CITADO,
                     contraejemplo=lineas[0] if lineas else None),
            _chequeo("parte excepcional definida negativa", [], no_negativas, DERIVADO),
        ]

    return _cronometrar("oracles", ejecutar)


# --- Verificación completa ---

def ejecutar_verificacion(nombre, config=None):
    """
    Ejecuta una verificación por nombre: un caso, "theorem31", "canonical",
    "ko", "examples", "lemmas" u "oracles".
    """
    if nombre == "theorem31":
        return verify_theorem31(config=config)
    if nombre == "canonical":
        return verify_canonical_rho1(config=config)
    if nombre == "ko":
        return verify_kobayashi_ochiai(config=config)
    if nombre == "examples":
        return verify_examples(config=config)
    if nombre == "lemmas":
        return verify_constructive_lemmas(config=config)
    if nombre == "oracles":
        return verify_oracles(config=config)
    return verify_case(nombre, config=config)


def verify_all(config=None, trabajadores=None, nombres=ORDEN_COMPLETO):
    """
    Todas las verificaciones en orden fijo. Con más de un trabajador corren en
    procesos separados; el orden de los resultados no cambia.

    Returns:
        list: VerificationResult en el orden de `nombres`
    """
    config = _config(config)
    trabajadores = trabajadores or config["verificacion"]["trabajadores"]
    if trabajadores <= 1:
        return [ejecutar_verificacion(nombre, config) for nombre in nombres]
    with ProcessPoolExecutor(max_workers=trabajadores) as executor:
        return list(executor.map(ejecutar_verificacion, nombres, [copy.deepcopy(config)] * len(nombres)))
