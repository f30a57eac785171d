"""
Pruebas de la verificación: casos tóricos, suites de propiedades y
verificación completa en paralelo
"""
import json

import pytest

from utils.errores import ErrorVerificacion
from utils.verify import (
    FAIL, ORDEN_COMPLETO, PASS, verify_all, verify_canonical_rho1, verify_case, verify_examples,
    verify_kobayashi_ochiai, verify_oracles, verify_constructive_lemmas, verify_theorem31,
)

CONFIG_RAPIDA = {"oraculos": {"pares_interseccion": 20}}


def _sin_fallas(resultado):
    fallidos = [c.nombre for c in resultado.subchecks if not c.ok and not c.informativo]
    assert resultado.estado == PASS, fallidos
    assert resultado.contraejemplo is None


@pytest.mark.parametrize("identificador", ["3.2-1", "3.2-2", "3.2-10", "4.1", "4.2", "4.3"])
def test_casos(identificador):
    resultado = verify_case(identificador)
    _sin_fallas(resultado)
    assert resultado.subchecks


def test_casos_desconocidos():
    for identificador in ("3.2-0", "3.2-11", "3.2-x", "4.4", ""):
        with pytest.raises(ErrorVerificacion):
            verify_case(identificador)


def test_chequeos_informativos_no_cuentan():
    """En 4.3 las coordenadas literales de -K_Z son solo informativas"""
    resultado = verify_case("4.3")
    assert any(c.informativo for c in resultado.subchecks)
    assert resultado.estado == PASS


def test_teorema_de_complejidad():
    resultado = verify_theorem31(1, 3, 2)
    _sin_fallas(resultado)
    piso = next(c for c in resultado.subchecks if c.nombre.startswith("(X, piso de B)"))
    assert piso.procedencia == "PAPER"
    assert piso.calculado == "0"
    assert not piso.informativo


def test_falla_inyectada():
    resultado = verify_theorem31(1, 3, 2, falla_inyectada=True)
    assert resultado.estado == FAIL
    assert resultado.contraejemplo is not None
    assert resultado.a_dict()["contraejemplo"] == resultado.contraejemplo


def test_censo_canonico():
    _sin_fallas(verify_canonical_rho1(3))


def test_kobayashi_ochiai():
    _sin_fallas(verify_kobayashi_ochiai())


def test_ejemplos():
    _sin_fallas(verify_examples())


def test_lemas_constructivos():
    _sin_fallas(verify_constructive_lemmas(2, 2))


def test_oraculos():
    _sin_fallas(verify_oracles(CONFIG_RAPIDA))


@pytest.mark.slow
def test_cotas_de_aceptacion():
    """Censo hasta 5, lemas con cotas 3 y 4, teorema con 2/6/4"""
    _sin_fallas(verify_canonical_rho1(5))
    _sin_fallas(verify_constructive_lemmas(3, 4))
    _sin_fallas(verify_theorem31(2, 6, 4))


def test_salida_determinista():
    """Sin tiempos, dos corridas producen el mismo JSON"""
    primera = json.dumps(verify_case("4.2").a_dict(), sort_keys=True)
    segunda = json.dumps(verify_case("4.2").a_dict(), sort_keys=True)
    assert primera == segunda
    assert "tiempo" not in verify_case("4.2").a_dict()
    assert "tiempo" in verify_case("4.2").a_dict(incluir_tiempo=True)


def test_paralelo_igual_a_secuencial():
    nombres = ("3.2-1", "3.2-3", "4.1", "ko")
    secuencial = verify_all(CONFIG_RAPIDA, 1, nombres)
    paralelo = verify_all(CONFIG_RAPIDA, 2, nombres)
    assert [r.caso for r in paralelo] == list(nombres)
    assert [r.a_dict() for r in paralelo] == [r.a_dict() for r in secuencial]


def test_orden_completo():
    assert ORDEN_COMPLETO[:10] == tuple(f"3.2-{n}" for n in range(1, 11))
    assert ORDEN_COMPLETO[-1] == "oracles"


if __name__ == "__main__":
    pruebas = [
        test_casos_desconocidos, test_chequeos_informativos_no_cuentan,
        test_teorema_de_complejidad, test_falla_inyectada, test_censo_canonico,
        test_kobayashi_ochiai, test_ejemplos, test_lemas_constructivos, test_oraculos,
        test_salida_determinista, test_paralelo_igual_a_secuencial, test_orden_completo,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
    for identificador in ("3.2-1", "3.2-2", "3.2-10", "4.1", "4.2", "4.3"):
        test_casos(identificador)
        print(f"Caso {identificador} - verificación (esperado: PASS)")
