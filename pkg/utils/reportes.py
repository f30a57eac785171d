"""
Módulo de reportes en texto
Arma reportes con el formato de ticket: encabezados centrados,
separadores y líneas nombre/valor alineadas
"""
import os
from datetime import datetime

from utils.lattice import formatear_racional
from utils.rutas import obtener_ruta_reportes

ANCHO_POR_DEFECTO = 64


def formatear_texto_centrado(texto, ancho=ANCHO_POR_DEFECTO):
    """Centra el texto en el ancho dado; lo corta si no entra"""
    texto = str(texto)
    if len(texto) >= ancho:
        return texto[:ancho]
    espacios_izq = (ancho - len(texto)) // 2
    espacios_der = ancho - len(texto) - espacios_izq
    return ' ' * espacios_izq + texto + ' ' * espacios_der


def formatear_linea(nombre, valor, ancho=ANCHO_POR_DEFECTO):
    """
    Nombre a la izquierda y valor a la derecha, alineado al final.
    Si no entra, el nombre se trunca con "...".
    """
    valor = str(valor)
    espacios = ancho - len(nombre) - len(valor)
    if espacios < 1:
        maximo = max(ancho - len(valor) - 4, 0)
        nombre = nombre[:maximo] + "..."
        espacios = max(ancho - len(nombre) - len(valor), 1)
    return nombre + ' ' * espacios + valor


def _encabezado(titulo, ancho):
    return [
        "=" * ancho,
        formatear_texto_centrado("COMPLEJIDAD TÓRICA", ancho),
        "=" * ancho,
        formatear_texto_centrado(f"=== {titulo} ===", ancho),
        "=" * ancho,
    ]


def reporte_verificacion(resultado, ancho=ANCHO_POR_DEFECTO, incluir_tiempo=False):
    """
    Líneas del reporte de un VerificationResult.

    Returns:
        list: Líneas de texto
    """
    lineas = _encabezado(f"CASO {resultado.caso}", ancho)
    for chequeo in resultado.subchecks:
        marca = "[INFO]" if chequeo.informativo else ("[OK]" if chequeo.ok else "[ERROR]")
        lineas.append(formatear_linea(chequeo.nombre, marca, ancho))
        lineas.append(formatear_linea(f"  esperado ({chequeo.procedencia})", chequeo.esperado, ancho))
        lineas.append(formatear_linea("  calculado", chequeo.calculado, ancho))
    lineas.append("-" * ancho)
    if incluir_tiempo and resultado.tiempo is not None:
        lineas.append(formatear_linea("Tiempo (s)", f"{resultado.tiempo:.2f}", ancho))
    lineas.append(formatear_linea("RESULTADO", resultado.estado, ancho))
    if resultado.contraejemplo:
        lineas.append(f"Contraejemplo: {resultado.contraejemplo}")
    lineas.append("=" * ancho)
    return lineas


def reporte_resumen(resultados, ancho=ANCHO_POR_DEFECTO):
    """Una línea por caso y el resultado global"""
    lineas = _encabezado("RESUMEN", ancho)
    for resultado in resultados:
        lineas.append(formatear_linea(resultado.caso, resultado.estado, ancho))
    lineas.append("-" * ancho)
    global_ok = all(r.estado == "PASS" for r in resultados)
    lineas.append(formatear_linea("TOTAL", "PASS" if global_ok else "FAIL", ancho))
    lineas.append("=" * ancho)
    return lineas


def reporte_complejidad(P, reporte, ancho=ANCHO_POR_DEFECTO):
    """Líneas del reporte de un ComplexityReport"""
    lineas = _encabezado("COMPLEJIDAD", ancho)
    lineas.append(f"Abanico: {P.base}")
    lineas.append(f"Borde: {P.boundary}")
    lineas.append(f"Moduli: {P.moduli.divisor} en {P.moduli.model}")
    lineas.append("-" * ancho)
    lineas.append(formatear_linea("Norma |S|", formatear_racional(reporte.norma), ancho))
    lineas.append(formatear_linea("Rango del span", reporte.rango_span, ancho))
    lineas.append(formatear_linea("Rango de Picard", reporte.picard, ancho))
    lineas.append(formatear_linea("Orbifold", formatear_racional(reporte.valor_orbifold), ancho))
    if reporte.valor_absoluto is not None:
        lineas.append(formatear_linea("Absoluta", formatear_racional(reporte.valor_absoluto), ancho))
    lineas.append(formatear_linea("Clásica", formatear_racional(reporte.valor_clasico), ancho))
    testigo = reporte.testigo
    if testigo is not None:
        lineas.append("-" * ancho)
        for D, a in testigo.boundary_components:
            lineas.append(formatear_linea(f"  borde {D}", formatear_racional(a), ancho))
        for M, l in testigo.moduli_components:
            lineas.append(formatear_linea(f"  moduli {M.divisor}", formatear_racional(l), ancho))
    if reporte.cotas:
        lineas.append("-" * ancho)
        for clave, valor in reporte.cotas.items():
            lineas.append(formatear_linea(f"  {clave}", valor, ancho))
    lineas.append("=" * ancho)
    return lineas


def guardar_reporte(lineas, nombre):
    """
    Guarda el reporte en data/reportes.

    Returns:
        str: Ruta del archivo guardado
    """
    marca = datetime.now().strftime("%Y%m%d_%H%M%S")
    seguro = "".join(c if c.isalnum() or c in "-_." else "_" for c in nombre)
    ruta = os.path.join(obtener_ruta_reportes(), f"reporte_{seguro}_{marca}.txt")
    with open(ruta, 'w', encoding='utf-8') as f:
        f.write("\n".join(lineas) + "\n")
    return ruta
