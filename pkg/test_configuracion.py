"""
Pruebas de configuración, rutas, lectura de JSON y formato de reportes
"""
import json
import os
import tempfile
from fractions import Fraction

import pytest

from utils.configuracion import CONFIGURACION_POR_DEFECTO, cargar_configuracion, fusionar
from utils.divisor import borde_torico
from utils.errores import ErrorFormato
from utils.fixtures import cargar_ejemplos
from utils.genpair import is_gklt
from utils.reportes import formatear_linea, formatear_texto_centrado, guardar_reporte
from utils.rutas import VARIABLE_DATA, obtener_ruta_data
from utils.serializacion import (
    fan_desde_dict, leer_json, par_a_dict, par_desde_dict, rayos_desde_lista,
)


def test_configuracion_por_defecto_se_escribe():
    with tempfile.TemporaryDirectory() as carpeta:
        ruta = os.path.join(carpeta, "config.json")
        config = cargar_configuracion(ruta)
        assert config == CONFIGURACION_POR_DEFECTO
        with open(ruta, encoding="utf-8") as f:
            assert json.load(f) == CONFIGURACION_POR_DEFECTO


def test_configuracion_parcial():
    """Las claves ausentes toman el valor por defecto"""
    with tempfile.TemporaryDirectory() as carpeta:
        ruta = os.path.join(carpeta, "config.json")
        with open(ruta, "w", encoding="utf-8") as f:
            json.dump({"busqueda": {"cota_rayos": 4}}, f)
        config = cargar_configuracion(ruta)
    assert config["busqueda"]["cota_rayos"] == 4
    assert config["busqueda"]["cota_coordenadas"] == CONFIGURACION_POR_DEFECTO["busqueda"]["cota_coordenadas"]
    assert config["lemas"] == CONFIGURACION_POR_DEFECTO["lemas"]


def test_configuracion_invalida():
    with tempfile.TemporaryDirectory() as carpeta:
        ruta = os.path.join(carpeta, "config.json")
        with open(ruta, "w", encoding="utf-8") as f:
            f.write("{ no es json")
        assert cargar_configuracion(ruta) == CONFIGURACION_POR_DEFECTO


def test_fusionar_no_modifica_la_base():
    base = {"a": {"b": 1, "c": 2}, "d": 3}
    resultado = fusionar(base, {"a": {"b": 5}, "e": 6})
    assert resultado == {"a": {"b": 5, "c": 2}, "d": 3, "e": 6}
    assert base["a"]["b"] == 1


def test_carpeta_data_redirigida():
    anterior = os.environ.get(VARIABLE_DATA)
    with tempfile.TemporaryDirectory() as carpeta:
        os.environ[VARIABLE_DATA] = carpeta
        try:
            assert obtener_ruta_data() == carpeta
            ruta = guardar_reporte(["linea 1", "linea 2"], "prueba/ñ")
            assert ruta.startswith(os.path.join(carpeta, "reportes"))
            with open(ruta, encoding="utf-8") as f:
                assert f.read() == "linea 1\nlinea 2\n"
        finally:
            if anterior is None:
                del os.environ[VARIABLE_DATA]
            else:
                os.environ[VARIABLE_DATA] = anterior


def test_json_con_linea_y_columna():
    with pytest.raises(ErrorFormato) as error:
        leer_json('{\n  "rays": [1, 2,\n}')
    assert error.value.linea == 3
    assert "línea 3" in str(error.value)


def test_flotantes_rechazados():
    with pytest.raises(ErrorFormato):
        rayos_desde_lista([[1.0, 0], [0, 1], [-1, -1]])
    with pytest.raises(ErrorFormato):
        par_desde_dict({"fan": [[1, 0], [0, 1], [-1, -1]], "boundary": [["1,0", 0.5]]})
    with pytest.raises(ErrorFormato):
        fan_desde_dict({"rayos": []})


def test_par_desde_dict():
    datos = {"fan": {"rays": [[1, 0], [0, 1], [-1, -1]]},
             "boundary": [["1,0", "1"], ["0,1", "1"], ["-1,-1", "1"]]}
    P = par_desde_dict(datos)
    assert P.boundary == borde_torico(P.base)
    otra = par_desde_dict(par_a_dict(P))
    assert otra.boundary == P.boundary
    Q = par_desde_dict(cargar_ejemplos()["no_desciende"]["par"])
    assert is_gklt(Q)
    assert Q.moduli.divisor.coeff((-1, -1)) == Fraction(2)


def test_formato_de_lineas():
    assert formatear_texto_centrado("AB", 6) == "  AB  "
    assert formatear_texto_centrado("ABCDEFG", 4) == "ABCD"
    assert formatear_linea("Total", "3", 10) == "Total    3"
    linea = formatear_linea("Un nombre muy largo", "1/2", 12)
    assert len(linea) == 12
    assert linea.endswith("1/2")
    assert "..." in linea


if __name__ == "__main__":
    pruebas = [
        test_configuracion_por_defecto_se_escribe, test_configuracion_parcial,
        test_configuracion_invalida, test_fusionar_no_modifica_la_base, test_carpeta_data_redirigida,
        test_json_con_linea_y_columna, test_flotantes_rechazados, test_par_desde_dict,
        test_formato_de_lineas,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
