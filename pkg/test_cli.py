"""
Pruebas de la línea de comandos: salida JSON y códigos de salida
"""
import io
import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout

from ui.cli import SALIDA_OK, SALIDA_USO, ejecutar
from utils.fixtures import caso


def correr(*argumentos):
    """Ejecuta la CLI con una configuración temporal y devuelve (código, stdout)"""
    with tempfile.TemporaryDirectory() as carpeta:
        ruta = os.path.join(carpeta, "config.json")
        salida, errores = io.StringIO(), io.StringIO()
        with redirect_stdout(salida), redirect_stderr(errores):
            codigo = ejecutar(["--config", ruta, *argumentos])
    return codigo, salida.getvalue()


def test_fan_resolve():
    datos = caso("4.2")
    codigo, texto = correr("fan", "resolve", "--rays", json.dumps(datos["fan"]), "--json")
    assert codigo == SALIDA_OK
    resultado = json.loads(texto)
    assert len(resultado["rays"]) == len(datos["resolucion"])


def test_fan_info_en_texto():
    codigo, texto = correr("fan", "info", "--rays", "[[1,0],[-1,2],[0,-1]]")
    assert codigo == SALIDA_OK
    assert "F_2" in texto


def test_fan_mmp():
    codigo, texto = correr("fan", "mmp", "--rays", "[[1,0],[1,1],[0,1],[-1,-1]]", "--json")
    assert codigo == SALIDA_OK
    traza = json.loads(texto)
    assert len(traza["pasos"]) == 1
    assert traza["terminal"] == "rho1"
    assert sorted(traza["final"]["rays"]) == [[-1, -1], [0, 1], [1, 0]]


def test_json_mal_formado():
    codigo, _ = correr("fan", "resolve", "--rays", "[[1,0],")
    assert codigo == SALIDA_USO


def test_abanico_invalido():
    codigo, _ = correr("fan", "info", "--rays", "[[1,0],[0,1]]")
    assert codigo == SALIDA_USO


def test_discrepancia():
    par = json.dumps({"fan": {"rays": [[1, 0], [0, 1], [-1, -1]]}})
    codigo, texto = correr("pair", "discrepancy", "--par", par, "--rayo", "1,1", "--json")
    assert codigo == SALIDA_OK
    assert json.loads(texto)["discrepancia"] == "2"
    codigo, _ = correr("pair", "discrepancy", "--par", par, "--rayo", "uno")
    assert codigo == SALIDA_USO


def test_busqueda_de_ejemplo():
    codigo, texto = correr("complexity", "search", "--ejemplo", "fn-2", "--json")
    assert codigo == SALIDA_OK
    assert json.loads(texto)["valor"] == "0"
    codigo, _ = correr("complexity", "search", "--ejemplo", "otro")
    assert codigo == SALIDA_USO
    codigo, _ = correr("complexity", "search")
    assert codigo == SALIDA_USO


def test_verificar_caso():
    codigo, texto = correr("verify", "case", "4.2", "--json")
    assert codigo == SALIDA_OK
    assert json.loads(texto)["estado"] == "PASS"
    codigo, _ = correr("verify", "case")
    assert codigo == SALIDA_USO
    codigo, _ = correr("verify", "case", "9.9")
    assert codigo == SALIDA_USO


def test_subcomando_desconocido():
    codigo, _ = correr("mezclar")
    assert codigo == SALIDA_USO


if __name__ == "__main__":
    pruebas = [
        test_fan_resolve, test_fan_info_en_texto, test_fan_mmp, test_json_mal_formado,
        test_abanico_invalido, test_discrepancia, test_busqueda_de_ejemplo,
        test_verificar_caso, test_subcomando_desconocido,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
