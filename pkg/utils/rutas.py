"""
Rutas del proyecto: raíz, data/, fixtures y reportes guardados
La carpeta data se puede redirigir con la variable de entorno COMPLEJIDAD_TORICA_DATA
"""
import os

VARIABLE_DATA = 'COMPLEJIDAD_TORICA_DATA'


def obtener_ruta_base():
    """Raíz del proyecto (la carpeta que contiene utils/)"""
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def obtener_ruta_data():
    """
    Obtiene la ruta de la carpeta data.
    Si COMPLEJIDAD_TORICA_DATA está definida se usa esa carpeta.

    Returns:
        str: Ruta completa de la carpeta data
    """
    redirigida = os.getenv(VARIABLE_DATA)
    if redirigida:
        return redirigida
    return os.path.join(obtener_ruta_base(), 'data')


def obtener_ruta_json(nombre_archivo):
    """
    Obtiene la ruta de un archivo JSON dentro de data.

    Args:
        nombre_archivo: Nombre del archivo JSON (ej: 'config.json')

    Returns:
        str: Ruta completa del archivo JSON
    """
    return os.path.join(obtener_ruta_data(), nombre_archivo)


def obtener_ruta_fixtures():
    """Carpeta de fixtures; siempre la del proyecto, no se redirige"""
    return os.path.join(obtener_ruta_base(), 'data', 'fixtures')


def obtener_ruta_reportes():
    """Obtiene la carpeta de reportes guardados, creándola si no existe"""
    ruta = os.path.join(obtener_ruta_data(), 'reportes')
    os.makedirs(ruta, exist_ok=True)
    return ruta
