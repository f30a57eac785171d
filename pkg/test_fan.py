"""
Pruebas de abanicos: validación, resolución mínima de los casos tóricos,
contracciones, equivalencia por GL(2,Z) y enumeración
"""
import pytest

from utils.errores import ErrorAbanico
from utils.fan import (
    abanico_blowup_p2, abanico_fn, abanico_hirzebruch, abanico_p1xp1, abanico_p2,
    aplicar_matriz, canonical_form, enumerate_fans, hirzebruch_index, is_Fn, is_P2,
    is_removable, lattice_equivalent, mfs_structures, minimal_resolution, new_fan,
    picard_rank, remove_ray, star_subdivision,
)
from utils.fixtures import abanico_de, caso
from utils.lattice import LatticeVector


def test_abanicos_invalidos():
    with pytest.raises(ErrorAbanico):
        new_fan([(1, 0), (0, 1)])
    with pytest.raises(ErrorAbanico):
        new_fan([(1, 0), (2, 0), (0, 1), (-1, -1)])
    # no completo: el cono de cierre no es convexo
    with pytest.raises(ErrorAbanico):
        new_fan([(1, 0), (0, 1), (-1, 1)])


def test_primitiviza_y_ordena():
    X = new_fan([(0, 2), (-3, -3), (1, 0)])
    assert X == abanico_p2()


@pytest.mark.parametrize("identificador", ["4.1", "4.2", "4.3"])
def test_resolucion_de_los_casos(identificador):
    datos = caso(identificador)
    Y, pi = minimal_resolution(abanico_de(datos["fan"]))
    assert sorted(Y.rays) == sorted(LatticeVector(*r) for r in datos["resolucion"])
    assert Y.is_smooth()
    assert len(pi.exceptional_rays) == len(datos["resolucion"]) - 3


def test_resolucion_de_F_n():
    for n in range(2, 6):
        assert minimal_resolution(abanico_fn(n))[0] == abanico_hirzebruch(n)


def test_blowup_y_contraccion():
    Y, pi = star_subdivision(abanico_p2(), (1, 1))
    assert Y == abanico_blowup_p2()
    assert pi.exceptional_rays == (LatticeVector(1, 1),)
    assert is_removable(Y, LatticeVector(1, 1))
    assert not is_removable(Y, LatticeVector(1, 0))
    assert remove_ray(Y, LatticeVector(1, 1)) == abanico_p2()
    with pytest.raises(ErrorAbanico):
        remove_ray(abanico_p2(), LatticeVector(1, 0))
    with pytest.raises(ErrorAbanico):
        star_subdivision(abanico_p2(), (1, 0))


def test_fibraciones_de_mori():
    """P^1 x P^1 tiene dos fibraciones, P^2 ninguna"""
    assert len(mfs_structures(abanico_p1xp1())) == 2
    assert len(mfs_structures(abanico_hirzebruch(3))) == 1
    assert mfs_structures(abanico_p2()) == []
    assert picard_rank(abanico_p1xp1()) == 2


def test_equivalencia():
    F2 = abanico_de([[-1, 0], [0, 1], [2, -1]])
    equivalentes, g = lattice_equivalent(abanico_fn(2), F2)
    assert equivalentes
    imagen = sorted(aplicar_matriz(g, v) for v in abanico_fn(2).rays)
    assert imagen == sorted(F2.rays)
    assert not lattice_equivalent(abanico_p2(), F2)[0]
    assert not lattice_equivalent(abanico_p2(), abanico_p1xp1())[0]


def test_forma_canonica_invariante():
    X = abanico_de(caso("4.1")["fan"])
    g = ((1, 1), (0, 1))
    imagen = new_fan([aplicar_matriz(g, v) for v in X.rays])
    assert canonical_form(imagen) == canonical_form(X)


def test_enumeracion_pequena():
    """Caja 1 con 3 rayos: P^2 y F_2"""
    abanicos = enumerate_fans(1, 3)
    assert len(abanicos) == 2
    assert any(is_P2(X) for X in abanicos)
    assert any(is_Fn(X) == 2 for X in abanicos)
    with pytest.raises(ErrorAbanico):
        enumerate_fans(0, 3)


def test_clasificadores():
    assert is_Fn(abanico_fn(3)) == 3
    assert is_Fn(abanico_p2()) is None
    assert is_P2(abanico_p2())
    assert hirzebruch_index(abanico_hirzebruch(2)) == 2
    assert hirzebruch_index(abanico_p1xp1()) == 0
    assert hirzebruch_index(abanico_p2()) is None


if __name__ == "__main__":
    pruebas = [
        test_abanicos_invalidos, test_primitiviza_y_ordena, test_resolucion_de_F_n,
        test_blowup_y_contraccion, test_fibraciones_de_mori, test_equivalencia,
        test_forma_canonica_invariante, test_enumeracion_pequena, test_clasificadores,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
    for identificador in ("4.1", "4.2", "4.3"):
        test_resolucion_de_los_casos(identificador)
        print(f"Caso resolución {identificador} - lista de rayos (esperado: igual a la del caso)")
