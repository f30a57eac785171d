"""
Pruebas del simplex exacto y de los certificados de Farkas
"""
from fractions import Fraction

import pytest

from utils.errores import ErrorLP
from utils.simplex import (
    INFACTIBLE, NO_ACOTADO, OPTIMO, resolver_lp, verificar_certificado, verificar_solucion,
)


def test_maximo_simple():
    resultado = resolver_lp([1, 1], [[1, 0], [0, 1]], [2, 3])
    assert resultado.estado == OPTIMO
    assert resultado.valor == 5
    assert resultado.x == [2, 3]


def test_valor_fraccionario():
    """max x con 3x <= 1 -> 1/3 exacto"""
    resultado = resolver_lp([1], [[3]], [1])
    assert resultado.valor == Fraction(1, 3)


def test_minimo_con_igualdades():
    # min x + 2y con x + y = 4, x <= 3
    resultado = resolver_lp([1, 2], [[1, 0]], [3], [[1, 1]], [4], maximizar=False)
    assert resultado.es_optimo
    assert resultado.valor == 5
    assert verificar_solucion(resultado.x, [[1, 0]], [3], [[1, 1]], [4])


def test_infactible_con_certificado():
    """x <= 1 y x = 2"""
    filas_le, b_le, filas_eq, b_eq = [[1]], [1], [[1]], [2]
    resultado = resolver_lp([1], filas_le, b_le, filas_eq, b_eq)
    assert resultado.estado == INFACTIBLE
    assert not resultado.es_factible
    assert verificar_certificado(resultado.certificado, filas_le, b_le, filas_eq, b_eq)


def test_certificado_falso_rechazado():
    assert not verificar_certificado(None, [[1]], [1])
    assert not verificar_certificado([Fraction(1)], [[1]], [1])
    assert not verificar_certificado([Fraction(-1), Fraction(1)], [[1]], [1], [[1]], [0])


def test_rhs_negativo():
    # -x <= -2 equivale a x >= 2; min x -> 2
    resultado = resolver_lp([1], [[-1]], [-2], maximizar=False)
    assert resultado.valor == 2


def test_no_acotado():
    resultado = resolver_lp([1, 0], [[0, 1]], [1])
    assert resultado.estado == NO_ACOTADO


def test_filas_mal_formadas():
    with pytest.raises(ErrorLP):
        resolver_lp([1, 1], [[1]], [1])
    with pytest.raises(ErrorLP):
        resolver_lp([1], [[1]], [1, 2])


if __name__ == "__main__":
    pruebas = [
        test_maximo_simple, test_valor_fraccionario, test_minimo_con_igualdades,
        test_infactible_con_certificado, test_certificado_falso_rechazado, test_rhs_negativo,
        test_no_acotado, test_filas_mal_formadas,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
