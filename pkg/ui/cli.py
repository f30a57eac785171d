"""
Interfaz de línea de comandos
Subcomandos fan, divisor, pair, complexity y verify; salida en texto
con formato de ticket o JSON con --json
"""
import argparse
import logging
import sys

from utils import fixtures
from utils.complexity import (
    VARIANTES, complexity, line_complexity, search_min_complexity,
)
from utils.configuracion import cargar_configuracion, configurar_registro
from utils.divisor import (
    class_of, intersect, is_ample, is_big, is_cartier, is_nef,
)
from utils.errores import ErrorFormato, ErrorTorico
from utils.fan import (
    hirzebruch_index, is_Fn, is_P2, lattice_equivalent, minimal_resolution, picard_rank,
)
from utils.genpair import (
    adjunction_to_invariant_curve, crepant_rays, discrepancias, is_glc, is_gklt, is_glcy,
    is_log_trivial, log_discrepancy,
)
from utils.lattice import formatear_racional, vector
from utils.mmp import TERMINAL_RHO1, is_canonical, run_k_mmp
from utils.reportes import (
    formatear_linea, formatear_texto_centrado, guardar_reporte, reporte_complejidad,
    reporte_resumen, reporte_verificacion,
)
from utils.serializacion import (
    a_texto_json, cargar_archivo_json, coeficientes_desde_lista,
    descomposicion_desde_dict, fan_a_dict, fan_desde_dict, leer_json, par_desde_dict,
    reporte_a_dict, trace_a_dict,
)
from utils import verify

logger = logging.getLogger(__name__)

SALIDA_OK = 0
SALIDA_FALLA = 1
SALIDA_USO = 2


def leer_entrada(valor, nombre):
    """
    Lee un argumento JSON: texto en línea o "@ruta" para un archivo.

    Raises:
        ErrorFormato: Si el JSON es inválido o el archivo no existe
    """
    if valor is None:
        raise ErrorFormato(f"Falta el argumento {nombre}")
    if valor.startswith("@"):
        return cargar_archivo_json(valor[1:])
    return leer_json(valor, origen=nombre)


def _vector(texto):
    if texto is None:
        raise ErrorFormato("Falta el argumento --rayo")
    try:
        return vector(texto)
    except (ErrorTorico, TypeError, ValueError):
        raise ErrorFormato(f"Rayo inválido: '{texto}' (se espera \"x,y\")")


class Salida:
    """Acumula el resultado de un comando en JSON y en líneas de texto"""

    def __init__(self, args, config):
        self.como_json = args.json
        self.guardar = args.guardar
        self.ancho = config["reportes"]["ancho"]
        self.datos = {}
        self.lineas = []

    def titulo(self, texto):
        self.lineas.extend(["=" * self.ancho, formatear_texto_centrado(texto, self.ancho), "=" * self.ancho])

    def linea(self, nombre, valor):
        self.lineas.append(formatear_linea(nombre, valor, self.ancho))

    def emitir(self, nombre_reporte):
        if self.como_json:
            print(a_texto_json(self.datos))
        else:
            print("\n".join(self.lineas))
        if self.guardar:
            ruta = guardar_reporte(self.lineas, nombre_reporte)
            print(f"Reporte guardado en {ruta}", file=sys.stderr)


# --- fan ---

def comando_fan(args, config):
    X = fan_desde_dict(leer_entrada(args.rays, "--rays"))
    salida = Salida(args, config)
    if args.accion == "info":
        n = is_Fn(X)
        salida.datos = {
            **fan_a_dict(X),
            "suave": X.is_smooth(),
            "picard": picard_rank(X),
            "conos_singulares": [[str(u), str(w)] for u, w in X.singular_cones()],
            "canonica": is_canonical(X),
            "P2": is_P2(X),
            "F_n": n,
            "hirzebruch": hirzebruch_index(X),
        }
        salida.titulo("ABANICO")
        salida.lineas.append(f"Rayos: {X}")
        salida.linea("Suave", "sí" if X.is_smooth() else "no")
        salida.linea("Rango de Picard", picard_rank(X))
        salida.linea("Canónica", "sí" if salida.datos["canonica"] else "no")
        for u, w in X.singular_cones():
            salida.lineas.append(f"  cono singular <({u}), ({w})>")
        if n is not None:
            salida.linea("Isomorfa a", f"F_{n}")
        if is_P2(X):
            salida.linea("Isomorfa a", "P^2")
        if salida.datos["hirzebruch"] is not None:
            salida.linea("Isomorfa a", f"Sigma_{salida.datos['hirzebruch']}")
    elif args.accion == "mmp":
        traza = run_k_mmp(X)
        salida.datos = trace_a_dict(traza)
        salida.titulo("MMP TÓRICO")
        salida.lineas.append(f"X: {X}")
        for paso in traza.pasos:
            salida.linea(f"  contraído ({paso.rayo})", f"K.D = {formatear_racional(paso.k_interseccion)}")
        salida.lineas.append(f"Final: {traza.final}")
        salida.linea("Terminal", "rho = 1" if traza.terminal == TERMINAL_RHO1 else "fibración de Mori")
    elif args.accion == "resolve":
        Y, pi = minimal_resolution(X)
        salida.datos = {**fan_a_dict(Y), "excepcionales": [[v.x, v.y] for v in pi.exceptional_rays]}
        salida.titulo("RESOLUCIÓN MÍNIMA")
        salida.lineas.append(f"X: {X}")
        salida.lineas.append(f"Y: {Y}")
        salida.linea("Rayos excepcionales", len(pi.exceptional_rays))
    else:
        Z = fan_desde_dict(leer_entrada(args.otro, "--otro"))
        equivalentes, g = lattice_equivalent(X, Z)
        salida.datos = {"equivalentes": equivalentes, "matriz": [list(f) for f in g] if g else None}
        salida.titulo("EQUIVALENCIA GL(2,Z)")
        salida.linea("Equivalentes", "sí" if equivalentes else "no")
        if g:
            salida.linea("Matriz", str([list(f) for f in g]))
    salida.emitir(f"fan_{args.accion}")
    return SALIDA_OK


# --- divisor ---

def _divisor(args, X, nombre="--d"):
    return coeficientes_desde_lista(X, leer_entrada(getattr(args, nombre.lstrip("-")), nombre), nombre)


def comando_divisor(args, config):
    X = fan_desde_dict(leer_entrada(args.fan, "--fan"))
    D = _divisor(args, X)
    salida = Salida(args, config)
    salida.titulo(f"DIVISOR: {args.accion.upper()}")
    salida.lineas.append(f"D = {D}")
    if args.accion == "intersect":
        D2 = _divisor(args, X, "--d2")
        valor = intersect(D, D2)
        salida.datos = {"interseccion": formatear_racional(valor)}
        salida.linea("D . D2", formatear_racional(valor))
    elif args.accion == "nef":
        salida.datos = {"nef": is_nef(D), "amplio": is_ample(D), "grande": is_big(D)}
        for clave, valor in salida.datos.items():
            salida.linea(clave.capitalize(), "sí" if valor else "no")
    elif args.accion == "cartier":
        salida.datos = {"cartier": is_cartier(D)}
        salida.linea("Cartier", "sí" if salida.datos["cartier"] else "no")
    else:
        coords = class_of(D).coords
        salida.datos = {"clase": [formatear_racional(c) for c in coords]}
        salida.linea("Clase", "(" + ", ".join(salida.datos["clase"]) + ")")
    salida.emitir(f"divisor_{args.accion}")
    return SALIDA_OK


# --- pair ---

def comando_pair(args, config):
    P = par_desde_dict(leer_entrada(args.par, "--par"))
    salida = Salida(args, config)
    salida.titulo(f"PAR GENERALIZADO: {args.accion.upper()}")
    if args.accion == "check":
        a = discrepancias(P)
        salida.datos = {
            "glc": is_glc(P), "gklt": is_gklt(P), "glcy": is_glcy(P),
            "log_trivial": is_log_trivial(P),
            "discrepancias": [[str(v), formatear_racional(x)] for v, x in a.items()],
            "crepantes": [[str(r) if not isinstance(r, tuple) else [str(v) for v in r], marca]
                          for r, marca in crepant_rays(P, P.moduli.model)],
        }
        for clave in ("glc", "gklt", "glcy", "log_trivial"):
            salida.linea(clave, "sí" if salida.datos[clave] else "no")
        for v, x in a.items():
            salida.linea(f"  a({v})", formatear_racional(x))
    elif args.accion == "discrepancy":
        rayo = _vector(args.rayo)
        valor = log_discrepancy(P, rayo)
        salida.datos = {"rayo": str(rayo), "discrepancia": formatear_racional(valor)}
        salida.linea(f"a({rayo})", formatear_racional(valor))
    else:
        pareja, datos = adjunction_to_invariant_curve(P, _vector(args.rayo))
        salida.datos = {
            "puntos": [str(q) for q in pareja.puntos],
            "coeficientes": [formatear_racional(c) for c in pareja.coeficientes],
            "grado_moduli": formatear_racional(pareja.grado_moduli),
            "grado": formatear_racional(pareja.grado()),
            "i_Q": list(datos.i_Q),
            "complejidad": formatear_racional(line_complexity(pareja)),
        }
        for q, c in zip(pareja.puntos, pareja.coeficientes):
            salida.linea(f"  coeficiente en ({q})", formatear_racional(c))
        salida.linea("Grado de M_S", salida.datos["grado_moduli"])
        salida.linea("Grado de K + B + M", salida.datos["grado"])
        salida.linea("Complejidad en P^1", salida.datos["complejidad"])
    salida.emitir(f"pair_{args.accion}")
    return SALIDA_OK


# --- complexity ---

def _par_de_argumentos(args):
    if args.ejemplo:
        if args.ejemplo == "no_desciende":
            return fixtures.par_no_desciende()
        if args.ejemplo.startswith("fn-"):
            try:
                return fixtures.par_ejemplo_fn(int(args.ejemplo[3:]))
            except ValueError:
                pass
        raise ErrorFormato(f"Ejemplo desconocido: {args.ejemplo} (use fn-N o no_desciende)")
    return par_desde_dict(leer_entrada(args.par, "--par"))


def comando_complexity(args, config):
    P = _par_de_argumentos(args)
    salida = Salida(args, config)
    if args.accion == "compute":
        S = descomposicion_desde_dict(P, leer_entrada(args.descomposicion, "--descomposicion"))
        reporte = complexity(P, S, args.variante)
    else:
        busqueda = config["busqueda"]
        reporte = search_min_complexity(P, {
            "indice_orbifold": busqueda["indice_orbifold"],
            "multiplo_moduli": busqueda["multiplo_moduli"],
        })
        reporte.variante = args.variante
    salida.datos = reporte_a_dict(reporte)
    salida.lineas = reporte_complejidad(P, reporte, salida.ancho)
    salida.emitir(f"complexity_{args.accion}")
    return SALIDA_OK


# --- verify ---

def comando_verify(args, config):
    incluir_tiempo = config["verificacion"]["incluir_tiempo"]
    if args.accion == "case":
        resultados = [verify.verify_case(args.id, config)]
    elif args.accion == "theorem31":
        resultados = [verify.verify_theorem31(args.cota_coordenadas, args.cota_rayos,
                                              args.cota_denominador, config, args.falla_inyectada)]
    elif args.accion == "canonical":
        resultados = [verify.verify_canonical_rho1(args.cota, config)]
    elif args.accion == "ko":
        resultados = [verify.verify_kobayashi_ochiai(config)]
    elif args.accion == "examples":
        resultados = [verify.verify_examples(config)]
    elif args.accion == "lemmas":
        resultados = [verify.verify_constructive_lemmas(args.cota_rho2, args.cota_rho1, config)]
    elif args.accion == "oracles":
        resultados = [verify.verify_oracles(config)]
    else:
        resultados = verify.verify_all(config, args.trabajadores)

    ancho = config["reportes"]["ancho"]
    lineas = []
    for resultado in resultados:
        lineas.extend(reporte_verificacion(resultado, ancho, incluir_tiempo))
    if len(resultados) > 1:
        lineas.extend(reporte_resumen(resultados, ancho))
    global_ok = all(r.estado == verify.PASS for r in resultados)

    if args.json:
        datos = [r.a_dict(incluir_tiempo) for r in resultados]
        if args.accion == "all":
            datos = {"estado": verify.PASS if global_ok else verify.FAIL, "resultados": datos}
        else:
            datos = datos[0]
        print(a_texto_json(datos))
    else:
        print("\n".join(lineas))
    if args.guardar or config["reportes"]["guardar_respaldo"]:
        ruta = guardar_reporte(lineas, f"verify_{args.accion}")
        print(f"Reporte guardado en {ruta}", file=sys.stderr)
    return SALIDA_OK if global_ok else SALIDA_FALLA


# --- Parser ---

def _opciones_comunes(parser):
    parser.add_argument("--json", action="store_true", help="Salida en JSON")
    parser.add_argument("--guardar", action="store_true", help="Guarda el reporte en data/reportes")


def crear_parser():
    """Arma el parser con todos los subcomandos"""
    parser = argparse.ArgumentParser(
        prog="complejidad_torica",
        description="Complejidad generalizada de pares en superficies tóricas",
    )
    parser.add_argument("--config", help="Ruta alternativa de config.json")
    parser.add_argument("--registro", help="Nivel de registro (DEBUG, INFO, WARNING...)")
    comandos = parser.add_subparsers(dest="comando", required=True)

    fan = comandos.add_parser("fan", help="Abanicos")
    fan.add_argument("accion", choices=("info", "resolve", "equiv", "mmp"))
    fan.add_argument("--rays", required=True, help='JSON [[x,y],...] o {"rays": ...}; "@ruta" lee un archivo')
    fan.add_argument("--otro", help="Segundo abanico (equiv)")
    _opciones_comunes(fan)
    fan.set_defaults(funcion=comando_fan)

    divisor = comandos.add_parser("divisor", help="Divisores tóricos")
    divisor.add_argument("accion", choices=("intersect", "nef", "cartier", "class"))
    divisor.add_argument("--fan", required=True, help="Abanico en JSON")
    divisor.add_argument("--d", required=True, help='Coeficientes [["x,y", "p/q"], ...]')
    divisor.add_argument("--d2", help="Segundo divisor (intersect)")
    _opciones_comunes(divisor)
    divisor.set_defaults(funcion=comando_divisor)

    par = comandos.add_parser("pair", help="Pares generalizados")
    par.add_argument("accion", choices=("check", "discrepancy", "adjoin"))
    par.add_argument("--par", required=True, help='{"fan": ..., "boundary": [...], "moduli": {...}}')
    par.add_argument("--rayo", help='Rayo "x,y" (discrepancy, adjoin)')
    _opciones_comunes(par)
    par.set_defaults(funcion=comando_pair)

    comp = comandos.add_parser("complexity", help="Complejidad")
    comp.add_argument("accion", choices=("compute", "search"))
    comp.add_argument("--par", help="Par en JSON")
    comp.add_argument("--ejemplo", help="fn-N o no_desciende en lugar de --par")
    comp.add_argument("--descomposicion", help="Descomposición en JSON (compute)")
    comp.add_argument("--variante", choices=VARIANTES, default=VARIANTES[0])
    _opciones_comunes(comp)
    comp.set_defaults(funcion=comando_complexity)

    ver = comandos.add_parser("verify", help="Verificaciones")
    ver.add_argument("accion", choices=("case", "theorem31", "canonical", "ko", "examples",
                                        "lemmas", "oracles", "all"))
    ver.add_argument("id", nargs="?", help='Caso: "3.2-n", "4.1", "4.2" o "4.3"')
    ver.add_argument("--cota-coordenadas", type=int)
    ver.add_argument("--cota-rayos", type=int)
    ver.add_argument("--cota-denominador", type=int)
    ver.add_argument("--cota", type=int, help="Cota de coordenadas del censo")
    ver.add_argument("--cota-rho2", type=int)
    ver.add_argument("--cota-rho1", type=int)
    ver.add_argument("--falla-inyectada", action="store_true")
    ver.add_argument("--trabajadores", type=int)
    _opciones_comunes(ver)
    ver.set_defaults(funcion=comando_verify)
    return parser


def ejecutar(argv=None):
    """
    Ejecuta la línea de comandos.

    Returns:
        int: 0 si todo pasó, 1 si una verificación falló, 2 si hubo error de uso
    """
    parser = crear_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return SALIDA_USO if e.code else SALIDA_OK
    config = cargar_configuracion(args.config)
    configurar_registro(config, args.registro)
    if args.comando == "verify" and args.accion == "case" and not args.id:
        print("Error: 'verify case' necesita un identificador", file=sys.stderr)
        return SALIDA_USO
    if args.comando == "complexity" and not args.par and not args.ejemplo:
        print("Error: indique --par o --ejemplo", file=sys.stderr)
        return SALIDA_USO
    try:
        return args.funcion(args, config)
    except ErrorFormato as e:
        print(f"Error de formato: {e}", file=sys.stderr)
        return SALIDA_USO
    except ErrorTorico as e:
        print(f"Error: {e}", file=sys.stderr)
        return SALIDA_USO
