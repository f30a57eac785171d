"""
Pruebas del MMP tórico y de los modelos intermedios de rango 2 y 1
"""
from fractions import Fraction

import pytest

from utils.errores import ErrorMmp
from utils.fan import (
    abanico_blowup_p2, abanico_fn, abanico_hirzebruch, abanico_p1xp1, abanico_p2, new_fan,
    picard_rank,
)
from utils.fixtures import abanico_de, caso
from utils.genpair import generalized_pair, log_discrepancy
from utils.lattice import LatticeVector
from utils.mmp import (
    TERMINAL_MFS, TERMINAL_RHO1, is_canonical, k_negative_rays, rho1_noncanonical_model,
    _rayos_en_cono, rho2_intermediate_model, run_k_mmp,
)


def test_rayos_k_negativos():
    assert k_negative_rays(abanico_blowup_p2()) == [(LatticeVector(1, 1), -1)]
    assert k_negative_rays(abanico_p2()) == []
    assert k_negative_rays(abanico_p1xp1()) == []


def test_mmp_del_blowup():
    """Bl P^2 -> P^2 en un paso"""
    traza = run_k_mmp(abanico_blowup_p2())
    assert len(traza.pasos) == 1
    assert traza.pasos[0].rayo == LatticeVector(1, 1)
    assert traza.final == abanico_p2()
    assert traza.terminal == TERMINAL_RHO1


def test_mmp_termina_en_fibracion():
    traza = run_k_mmp(abanico_p1xp1())
    assert traza.pasos == ()
    assert traza.terminal == TERMINAL_MFS
    assert len(traza.mfs) == 2
    assert run_k_mmp(abanico_hirzebruch(2)).terminal == TERMINAL_MFS


def test_canonicidad():
    assert is_canonical(abanico_p2())
    assert is_canonical(abanico_fn(2))
    assert not is_canonical(abanico_fn(3))
    assert is_canonical(abanico_de(caso("4.1")["fan"]))


def test_rho2_en_P1xP1():
    assert rho2_intermediate_model(abanico_p1xp1()) is None


def test_rho2_con_contraccion():
    modelo = rho2_intermediate_model(abanico_blowup_p2())
    assert modelo.Y == modelo.X
    assert modelo.contraidos == (LatticeVector(1, 1),)
    assert modelo.Z == abanico_p2()
    assert modelo.excepcional is None


def test_rho2_sin_contracciones():
    # cuatro conos A1: hay que extraer un rayo con a = 1 antes de contraer
    X = new_fan([(1, 0), (1, 2), (-1, 0), (-1, -2)])
    assert picard_rank(X) == 2
    modelo = rho2_intermediate_model(X)
    E = modelo.excepcional
    assert E in modelo.Y.rays and E not in X.rays
    assert modelo.discrepancia == 1
    assert log_discrepancy(generalized_pair(X), E) == 1
    assert picard_rank(modelo.Z) == 1
    assert all(r not in modelo.Z.rays for r in modelo.contraidos)
    with pytest.raises(ErrorMmp):
        rho2_intermediate_model(abanico_p2())


def test_rho1_no_canonico():
    """El cono de índice 5 aporta E con a_E en (0,1) que sobrevive en Z"""
    X = new_fan([(1, 0), (0, 1), (-2, -5)])
    modelo = rho1_noncanonical_model(X)
    E = modelo.excepcional
    assert E not in X.rays
    assert 0 < modelo.discrepancia < 1
    assert log_discrepancy(generalized_pair(X), E) == modelo.discrepancia
    assert E in modelo.Z.rays
    assert picard_rank(modelo.Z) == 1
    assert set(modelo.Z.rays) <= set(modelo.Y.rays)


def test_busqueda_en_subcono():
    """En un subcono la caja de búsqueda es la del cono de X que lo contiene"""
    X = new_fan([(1, 0), (0, 1), (-2, -5)])
    P = generalized_pair(X)
    u, w = LatticeVector(-1, -3), LatticeVector(1, 0)
    candidatos, cota = _rayos_en_cono(P, u, w, lambda a: 0 < a < 1)
    assert cota == 5
    assert candidatos == [(LatticeVector(0, -1), Fraction(3, 5))]


@pytest.mark.parametrize("abanico", [
    abanico_de(caso("4.1")["fan"]), abanico_fn(3), abanico_p1xp1(),
])
def test_rho1_rechaza(abanico):
    with pytest.raises(ErrorMmp):
        rho1_noncanonical_model(abanico)


if __name__ == "__main__":
    pruebas = [
        test_rayos_k_negativos, test_mmp_del_blowup, test_mmp_termina_en_fibracion,
        test_canonicidad, test_rho2_en_P1xP1, test_rho2_con_contraccion,
        test_rho2_sin_contracciones, test_rho1_no_canonico, test_busqueda_en_subcono,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
