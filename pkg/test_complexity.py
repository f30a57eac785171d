"""
Pruebas de complejidad: descomposiciones, búsqueda acotada, cotas de
contracción y de Kobayashi-Ochiai, y sistemas de factibilidad
"""
from fractions import Fraction

import pytest

from utils.complexity import (
    ABSOLUTA, CLASICA, ORBIFOLD, complexity, coordenadas_en_base, curve_contraction_bound,
    decomposition, feasibility_system, kobayashi_ochiai_bound, line_complexity, max_norm_lp,
    nef_generators, norm, search_min_complexity, validate_decomposition,
)
from utils.divisor import BNefDivisor, borde_torico, canonical_divisor, divisor_primo, toric_divisor
from utils.errores import ErrorComplejidad, ErrorDivisor
from utils.fan import abanico_blowup_p2, abanico_fn, abanico_hirzebruch, abanico_p2, enumerate_fans
from utils.fixtures import (
    descomposicion_fn, descomposicion_no_desciende, familia_glcy, par_ejemplo_fn, par_no_desciende,
    sistema, sistema_hirzebruch,
)
from utils.genpair import adjunction_to_invariant_curve, generalized_pair


def _par_borde_p2():
    X = abanico_p2()
    return generalized_pair(X, borde_torico(X))


def _descomposicion_borde(P):
    return decomposition(None, [(divisor_primo(P.base, v), 1) for v in P.base.rays])


def test_borde_torico_de_P2():
    """Las tres rectas con peso 1: norma 3, complejidad 0"""
    P = _par_borde_p2()
    S = _descomposicion_borde(P)
    assert norm(S) == 3
    reporte = complexity(P, S)
    assert reporte.valor == 0
    assert reporte.rango_span == 1
    assert complexity(P, S, CLASICA).valor == 0


def test_descomposicion_vacia():
    P = _par_borde_p2()
    reporte = complexity(P, decomposition())
    assert reporte.valor_orbifold == 2
    assert reporte.valor_clasico == 3


def test_descomposicion_invalida():
    P = _par_borde_p2()
    H = divisor_primo(P.base, (1, 0))
    with pytest.raises(ErrorComplejidad):
        complexity(P, decomposition(None, [(H, 2)]))
    with pytest.raises(ErrorComplejidad):
        complexity(P, decomposition(None, [(H, -1)]))
    with pytest.raises(ErrorComplejidad):
        complexity(P, decomposition(), "otra")


def test_variante_absoluta_requiere_orbifold_trivial():
    P = _par_borde_p2()
    medio = toric_divisor(P.base, {(1, 0): Fraction(1, 2)})
    S = decomposition({(1, 0): 2}, [(medio, 1)])
    validate_decomposition(P, S)
    assert complexity(P, S, ORBIFOLD).valor == 2
    with pytest.raises(ErrorComplejidad):
        complexity(P, S, ABSOLUTA)


def test_ejemplos_de_moduli():
    for n in (2, 3):
        P = par_ejemplo_fn(n)
        reporte = complexity(P, descomposicion_fn(P, n))
        assert reporte.norma == 3
        assert reporte.valor == 0
    P = par_no_desciende()
    reporte = complexity(P, descomposicion_no_desciende(P))
    assert reporte.norma == 3
    assert reporte.valor == 0


def test_componente_de_moduli_no_nef():
    """Un divisor no nef no llega a ser componente de moduli"""
    P = par_no_desciende()
    E = divisor_primo(P.moduli.model, (1, 1))
    with pytest.raises(ErrorDivisor, match="no es nef"):
        BNefDivisor(model=P.moduli.model, morphism=P.moduli.morphism, divisor=E)


def test_norma_maxima():
    P = _par_borde_p2()
    valor, S = max_norm_lp(P, [divisor_primo(P.base, v) for v in P.base.rays], [])
    assert valor == 3
    assert norm(S) == 3
    assert max_norm_lp(P, [], [])[0] == 0


def test_busqueda_minima():
    """La búsqueda encuentra complejidad 0 en P^2 y en F_2"""
    reporte = search_min_complexity(_par_borde_p2())
    assert reporte.valor == 0
    assert reporte.valor_clasico == 0
    assert reporte.evaluados > 0
    reporte_fn = search_min_complexity(par_ejemplo_fn(2))
    assert reporte_fn.valor == 0
    assert reporte_fn.valor_orbifold >= 0


def test_orden_de_las_variantes():
    """clásica >= absoluta >= orbifold en cada par de la familia de prueba"""
    pares = 0
    for X in enumerate_fans(1, 4):
        for _, P in familia_glcy(X, 2, 4, 2):
            reporte = search_min_complexity(P)
            assert reporte.valor_clasico >= reporte.valor_absoluto >= reporte.valor_orbifold
            testigo = complexity(P, reporte.testigo)
            assert testigo.valor_clasico >= testigo.valor_orbifold
            pares += 1
    assert pares > 0


def test_estructuras_orbifold_dominadas():
    """Con D/n para n > 1 la capacidad no supera a la de n = 1: no se evalúan"""
    for n in (2, 3):
        P = next(P for nombre, P in familia_glcy(abanico_fn(n), 2, 4, 1) if nombre.endswith("1/2"))
        trivial = search_min_complexity(P, {"indice_orbifold": 1})
        con_orbifold = search_min_complexity(P, {"indice_orbifold": 3})
        assert con_orbifold.valor_orbifold == trivial.valor_orbifold
        assert con_orbifold.evaluados == trivial.evaluados
        assert con_orbifold.testigo.orbifold.es_trivial()


def test_generadores_nef():
    generadores = nef_generators(abanico_p2())
    assert len(generadores) == 3
    assert all(sum(D.coeffs) == 1 for D in generadores)


def test_cota_de_contraccion():
    # el excepcional de Bl P^2 solo lo cortan sus dos vecinos
    Y = abanico_blowup_p2()
    P = generalized_pair(Y, borde_torico(Y))
    assert curve_contraction_bound(P, (1, 1)) == 2
    with pytest.raises(ErrorComplejidad):
        curve_contraction_bound(P, (1, 0))


def test_complejidad_en_la_recta():
    pareja, _ = adjunction_to_invariant_curve(_par_borde_p2(), (1, 0))
    assert line_complexity(pareja) == 0


def test_kobayashi_ochiai_en_P2():
    valor, componentes = kobayashi_ochiai_bound(abanico_p2())
    assert valor == 3
    assert sum(l for _, l in componentes) == 3
    with pytest.raises(ErrorComplejidad):
        kobayashi_ochiai_bound(abanico_p2(), "otro")


def test_coordenadas_de_menos_K():
    for n in (1, 2, 5):
        Y = abanico_hirzebruch(n)
        base = [divisor_primo(Y, (0, 1)), divisor_primo(Y, (1, 0))]
        assert coordenadas_en_base(-canonical_divisor(Y), base) == [2, n + 2]


def test_sistemas_de_hirzebruch():
    """Sigma_n: alfa en [1, 1] para n >= 2 y en [0, 1] para n = 1"""
    for n in (2, 3, 7):
        resultado = feasibility_system(sistema_hirzebruch(n))
        assert resultado.factible
        assert (resultado.alfa_min, resultado.alfa_max) == (1, 1)
        assert resultado.componentes is not None
    resultado = feasibility_system(sistema("hirzebruch-1"))
    assert (resultado.alfa_min, resultado.alfa_max) == (0, 1)


def test_alfa_fijo_infactible():
    resultado = feasibility_system(sistema_hirzebruch(3), Fraction(1, 2))
    assert not resultado.factible
    assert resultado.certificado_valido


@pytest.mark.parametrize("identificador", ["case42", "case43"])
def test_sistemas_de_los_casos_son_infactibles(identificador):
    resultado = feasibility_system(sistema(identificador))
    assert not resultado.factible
    assert resultado.certificado_valido


def test_sistema_incompleto():
    with pytest.raises(ErrorComplejidad):
        feasibility_system({"id": "x", "total": 3})


if __name__ == "__main__":
    pruebas = [
        test_borde_torico_de_P2, test_descomposicion_vacia, test_descomposicion_invalida,
        test_variante_absoluta_requiere_orbifold_trivial, test_ejemplos_de_moduli,
        test_componente_de_moduli_no_nef,
        test_norma_maxima, test_busqueda_minima, test_orden_de_las_variantes,
        test_estructuras_orbifold_dominadas, test_generadores_nef, test_cota_de_contraccion,
        test_complejidad_en_la_recta, test_kobayashi_ochiai_en_P2, test_coordenadas_de_menos_K,
        test_sistemas_de_hirzebruch, test_alfa_fijo_infactible, test_sistema_incompleto,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
    for identificador in ("case42", "case43"):
        test_sistemas_de_los_casos_son_infactibles(identificador)
        print(f"Caso sistema {identificador} - infactible (esperado: certificado válido)")
