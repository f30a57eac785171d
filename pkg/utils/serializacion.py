"""
Módulo de serialización JSON
Formatos de abanicos, divisores, pares generalizados, descomposiciones
y reportes; los racionales viajan como textos exactos "p/q"
"""
import json

from utils.divisor import BNefDivisor, moduli_cero, toric_divisor
from utils.errores import ErrorFormato, ErrorTorico
from utils.fan import new_fan, refinement
from utils.lattice import formatear_racional, racional, vector


def leer_json(texto, origen="entrada"):
    """
    Interpreta un texto JSON.

    Raises:
        ErrorFormato: Con línea y columna si la sintaxis es inválida
    """
    try:
        return json.loads(texto)
    except json.JSONDecodeError as e:
        raise ErrorFormato(f"JSON inválido en {origen}: {e.msg}", linea=e.lineno, columna=e.colno)


def cargar_archivo_json(ruta):
    """Lee y decodifica un archivo JSON"""
    try:
        with open(ruta, 'r', encoding='utf-8') as f:
            return leer_json(f.read(), origen=ruta)
    except FileNotFoundError:
        raise ErrorFormato(f"No existe el archivo {ruta}")


def a_texto_json(objeto):
    return json.dumps(objeto, indent=2, ensure_ascii=False)


def _entero(valor, donde):
    if isinstance(valor, bool) or not isinstance(valor, int):
        raise ErrorFormato(f"Se esperaba un entero en {donde}, se recibió {valor!r}")
    return valor


def _racional(valor, donde):
    if isinstance(valor, bool) or isinstance(valor, float):
        raise ErrorFormato(f"Se esperaba un racional exacto en {donde}, se recibió {valor!r}")
    try:
        return racional(valor)
    except ErrorTorico:
        raise ErrorFormato(f"Racional inválido en {donde}: {valor!r}")


# --- Abanicos ---

def fan_a_dict(X):
    return {"rays": [[v.x, v.y] for v in X.rays]}


def rayos_desde_lista(lista, donde="rays"):
    if not isinstance(lista, list):
        raise ErrorFormato(f"'{donde}' debe ser una lista de pares [x, y]")
    rayos = []
    for i, par in enumerate(lista):
        if not isinstance(par, list) or len(par) != 2:
            raise ErrorFormato(f"{donde}[{i}] debe ser un par [x, y]")
        rayos.append((_entero(par[0], f"{donde}[{i}][0]"), _entero(par[1], f"{donde}[{i}][1]")))
    return rayos


def fan_desde_dict(datos):
    """Lee {"rays": [[x, y], ...]}; primitiviza y ordena"""
    if isinstance(datos, list):
        datos = {"rays": datos}
    if not isinstance(datos, dict) or "rays" not in datos:
        raise ErrorFormato("Un abanico se escribe como {\"rays\": [[x, y], ...]}")
    return new_fan(rayos_desde_lista(datos["rays"]))


# --- Divisores ---

def coeficientes_a_lista(D):
    return [[str(v), formatear_racional(c)] for v, c in D.items() if c != 0]


def coeficientes_desde_lista(fan, lista, donde="coeffs"):
    """Lee [["x,y", "p/q"], ...] o {"x,y": "p/q"} como divisor en el abanico"""
    if isinstance(lista, dict):
        lista = list(lista.items())
    if not isinstance(lista, list):
        raise ErrorFormato(f"'{donde}' debe ser una lista de pares [\"x,y\", \"p/q\"]")
    coeficientes = {}
    for i, par in enumerate(lista):
        if not isinstance(par, (list, tuple)) or len(par) != 2:
            raise ErrorFormato(f"{donde}[{i}] debe ser un par [\"x,y\", \"p/q\"]")
        try:
            v = vector(par[0])
        except (ErrorTorico, TypeError, ValueError):
            raise ErrorFormato(f"Rayo inválido en {donde}[{i}]: {par[0]!r}")
        coeficientes[v] = _racional(par[1], f"{donde}[{i}]")
    return toric_divisor(fan, coeficientes)


# --- Pares generalizados ---

def bnef_a_dict(M):
    return {"model": fan_a_dict(M.model), "coeffs": coeficientes_a_lista(M.divisor)}


def bnef_desde_dict(base, datos):
    """Lee {"model": fan, "coeffs": [...]} sobre la base dada"""
    if not isinstance(datos, dict) or "model" not in datos:
        raise ErrorFormato("El moduli se escribe como {\"model\": ..., \"coeffs\": [...]}")
    modelo = fan_desde_dict(datos["model"])
    D = coeficientes_desde_lista(modelo, datos.get("coeffs", []), "moduli.coeffs")
    return BNefDivisor(model=modelo, morphism=refinement(modelo, base), divisor=D)


def par_a_dict(P):
    return {
        "fan": fan_a_dict(P.base),
        "boundary": coeficientes_a_lista(P.boundary),
        "moduli": bnef_a_dict(P.moduli),
    }


def par_desde_dict(datos):
    """
    Lee {"fan": ..., "boundary": [...], "moduli": {"model": ..., "coeffs": [...]}}.
    boundary y moduli son opcionales.
    """
    from utils.genpair import generalized_pair
    if not isinstance(datos, dict) or "fan" not in datos:
        raise ErrorFormato("Un par se escribe como {\"fan\": ..., \"boundary\": [...], \"moduli\": {...}}")
    base = fan_desde_dict(datos["fan"])
    borde = coeficientes_desde_lista(base, datos.get("boundary", []), "boundary")
    moduli = bnef_desde_dict(base, datos["moduli"]) if datos.get("moduli") else moduli_cero(base)
    return generalized_pair(base, borde, moduli)


# --- Descomposiciones y reportes ---

def descomposicion_a_dict(S):
    if S is None:
        return None
    return {
        "orbifold": [[str(v), n] for v, n in S.orbifold.valores],
        "boundary": [
            {"coeffs": coeficientes_a_lista(D), "weight": formatear_racional(a)}
            for D, a in S.boundary_components
        ],
        "moduli": [
            {"model": fan_a_dict(M.model), "coeffs": coeficientes_a_lista(M.divisor),
             "weight": formatear_racional(l)}
            for M, l in S.moduli_components
        ],
    }


def descomposicion_desde_dict(P, datos):
    """Lee una descomposición de P; los componentes de moduli viven en el modelo de P"""
    from utils.complexity import decomposition
    from utils.genpair import estructura_orbifold
    if not isinstance(datos, dict):
        raise ErrorFormato("Una descomposición se escribe como {\"orbifold\": [...], \"boundary\": [...], \"moduli\": [...]}")
    orbifold = estructura_orbifold({
        vector(v): _entero(n, "orbifold") for v, n in datos.get("orbifold", [])
    })
    bordes = [
        (coeficientes_desde_lista(P.base, c.get("coeffs", []), "boundary"), _racional(c.get("weight", 1), "weight"))
        for c in datos.get("boundary", [])
    ]
    modulis = []
    for c in datos.get("moduli", []):
        D = coeficientes_desde_lista(P.moduli.model, c.get("coeffs", []), "moduli")
        M = BNefDivisor(model=P.moduli.model, morphism=P.moduli.morphism, divisor=D)
        modulis.append((M, _racional(c.get("weight", 1), "weight")))
    return decomposition(orbifold, bordes, modulis)


def reporte_a_dict(reporte):
    """ComplexityReport a dict con racionales exactos"""
    return {
        "variante": reporte.variante,
        "valor": formatear_racional(reporte.valor),
        "orbifold": formatear_racional(reporte.valor_orbifold),
        "absoluta": None if reporte.valor_absoluto is None else formatear_racional(reporte.valor_absoluto),
        "clasica": formatear_racional(reporte.valor_clasico),
        "norma": formatear_racional(reporte.norma),
        "rango_span": reporte.rango_span,
        "picard": reporte.picard,
        "testigo": descomposicion_a_dict(reporte.testigo),
        "cotas": dict(reporte.cotas),
    }


def trace_a_dict(traza):
    """MmpTrace a dict con los abanicos en línea"""
    return {
        "inicial": fan_a_dict(traza.inicial),
        "pasos": [
            {"rayo": str(p.rayo), "k_interseccion": formatear_racional(p.k_interseccion),
             "abanico": fan_a_dict(p.abanico)}
            for p in traza.pasos
        ],
        "final": fan_a_dict(traza.final),
        "terminal": traza.terminal,
        "mfs": [[str(v) for v in m.fiber_ray_pair] for m in traza.mfs],
    }
