"""
Pruebas de la aritmética en la red: vectores primitivos, determinantes,
fracciones continuas y suavizado de conos
"""
from fractions import Fraction

import pytest

from utils.errores import ErrorRed
from utils.lattice import (
    LatticeVector, cone_smoothing_rays, coordenadas_en_cono, det2, formatear_racional,
    hj_continued_fraction, is_primitive, ordenar_antihorario, primitive, racional, vector,
)


def v(x, y):
    return LatticeVector(x, y)


def test_primitivo():
    """(4,6) -> (2,3); el cero no define rayo"""
    assert primitive(v(4, 6)) == v(2, 3)
    assert primitive(v(-3, 0)) == v(-1, 0)
    assert is_primitive(v(2, 3))
    assert not is_primitive(v(2, 4))
    with pytest.raises(ErrorRed):
        primitive(v(0, 0))


def test_determinante():
    assert det2(v(1, 0), v(0, 1)) == 1
    assert det2(v(0, 1), v(1, 0)) == -1
    assert det2(v(-2, 1), v(1, 1)) == -3


def test_fraccion_continua():
    """7/3 = 3 - 1/(2 - 1/2)"""
    assert hj_continued_fraction(7, 3) == [3, 2, 2]
    assert hj_continued_fraction(3, 2) == [2, 2]
    assert hj_continued_fraction(5, 1) == [5]
    with pytest.raises(ErrorRed):
        hj_continued_fraction(3, 4)


def test_suavizado_de_conos():
    """Cono A2 <(1,0),(1,3)> y cono 1/3(1,1) <(1,0),(-1,3)>"""
    assert cone_smoothing_rays(v(1, 0), v(1, 3)) == [v(1, 1), v(1, 2)]
    assert cone_smoothing_rays(v(1, 3), v(1, 0)) == [v(1, 2), v(1, 1)]
    assert cone_smoothing_rays(v(1, 0), v(-1, 3)) == [v(0, 1)]
    assert cone_smoothing_rays(v(1, 0), v(0, 1)) == []
    with pytest.raises(ErrorRed):
        cone_smoothing_rays(v(1, 0), v(-1, 0))


def test_suavizado_unimodular():
    # cada cono consecutivo debe quedar con det 1
    u, w = v(-2, 1), v(1, -2)
    rayos = [w] + cone_smoothing_rays(w, u) + [u]
    assert all(abs(det2(a, b)) == 1 for a, b in zip(rayos, rayos[1:]))


def test_racionales_exactos():
    """Los float se rechazan"""
    assert racional("1/2") == Fraction(1, 2)
    assert racional(3) == Fraction(3)
    with pytest.raises(ErrorRed):
        racional(0.5)
    with pytest.raises(ErrorRed):
        racional("uno")
    assert formatear_racional(Fraction(3, 4)) == "3/4"
    assert formatear_racional(Fraction(8, 2)) == "4"


def test_vector_desde_texto():
    assert vector("3,-2") == v(3, -2)
    assert vector("(1, 1)") == v(1, 1)
    assert vector([0, -1]) == v(0, -1)
    with pytest.raises(ErrorRed):
        vector("1,2,3")


def test_orden_antihorario():
    desordenados = [v(0, -1), v(-1, 0), v(1, 0), v(0, 1), v(1, 1)]
    assert ordenar_antihorario(desordenados) == [v(1, 0), v(1, 1), v(0, 1), v(-1, 0), v(0, -1)]


def test_coordenadas_en_cono():
    assert coordenadas_en_cono(v(1, 1), v(1, 0), v(0, 1)) == (1, 1)
    assert coordenadas_en_cono(v(0, 1), v(1, 0), v(-1, 2)) == (Fraction(1, 2), Fraction(1, 2))


if __name__ == "__main__":
    pruebas = [
        test_primitivo, test_determinante, test_fraccion_continua, test_suavizado_de_conos,
        test_suavizado_unimodular, test_racionales_exactos, test_vector_desde_texto,
        test_orden_antihorario, test_coordenadas_en_cono,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
