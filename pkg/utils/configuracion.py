"""
Módulo de configuración
Lee data/config.json, completa las claves faltantes con los valores
por defecto y configura el registro
"""
import copy
import json
import logging
import os

from utils.rutas import obtener_ruta_json

CONFIGURACION_POR_DEFECTO = {
    "busqueda": {
        "cota_coordenadas": 2,
        "cota_rayos": 6,
        "cota_denominador": 4,
        "multiplo_moduli": 2,
        "indice_orbifold": 2,
    },
    "teorema31": {
        "indice_orbifold": 1,
        "generadores_por_abanico": None,
        "cota_soporte_generador": 4,
    },
    "censo": {
        "cota_coordenadas": 5,
    },
    "lemas": {
        "cota_rho2": 3,
        "cota_rho1": 4,
    },
    "oraculos": {
        "semilla": 20240607,
        "pares_interseccion": 200,
        "cota_coeficiente": 3,
    },
    "kobayashi_ochiai": {
        "cota_coeficiente": 3,
    },
    "verificacion": {
        "trabajadores": 1,
        "incluir_tiempo": False,
    },
    "reportes": {
        "ancho": 64,
        "guardar_respaldo": False,
    },
    "registro": {
        "nivel": "WARNING",
    },
}


def obtener_ruta_config():
    """Obtiene la ruta del archivo de configuración"""
    return obtener_ruta_json('config.json')


def fusionar(base, cambios):
    """
    Fusión profunda: los diccionarios anidados se combinan clave por clave.

    Returns:
        dict: Copia de base con los cambios aplicados
    """
    resultado = copy.deepcopy(base)
    for clave, valor in (cambios or {}).items():
        if isinstance(valor, dict) and isinstance(resultado.get(clave), dict):
            resultado[clave] = fusionar(resultado[clave], valor)
        else:
            resultado[clave] = valor
    return resultado


def guardar_configuracion(config, ruta=None):
    """Guarda la configuración en el archivo JSON"""
    ruta = ruta or obtener_ruta_config()
    os.makedirs(os.path.dirname(ruta), exist_ok=True)
    with open(ruta, 'w', encoding='utf-8') as f:
        json.dump(config, f, indent=2, ensure_ascii=False)


def cargar_configuracion(ruta=None):
    """
    Carga la configuración desde el archivo JSON.
    Si no existe, escribe los valores por defecto y los devuelve.

    Args:
        ruta: Ruta alternativa del archivo (por defecto data/config.json)

    Returns:
        dict: Configuración completa
    """
    ruta = ruta or obtener_ruta_config()
    try:
        with open(ruta, 'r', encoding='utf-8') as f:
            config = json.load(f)
        return fusionar(CONFIGURACION_POR_DEFECTO, config)
    except FileNotFoundError:
        config_default = copy.deepcopy(CONFIGURACION_POR_DEFECTO)
        try:
            guardar_configuracion(config_default, ruta)
        except OSError as e:
            print(f"Error al guardar configuración: {e}")
        return config_default
    except Exception as e:
        print(f"Error al cargar configuración: {e}")
        return copy.deepcopy(CONFIGURACION_POR_DEFECTO)


def configurar_registro(config=None, nivel=None):
    """Configura el registro raíz con el nivel de registro.nivel o el recibido"""
    if nivel is None:
        nivel = (config or CONFIGURACION_POR_DEFECTO).get("registro", {}).get("nivel", "WARNING")
    logging.basicConfig(
        level=getattr(logging, str(nivel).upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )
