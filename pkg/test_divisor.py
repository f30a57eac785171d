"""
Pruebas de divisores tóricos: intersecciones, Cartier, nef, clases,
pullback/pushforward y divisores b-nef
"""
from fractions import Fraction

import pytest

from utils.divisor import (
    b_nef, borde_torico, canonical_divisor, class_of, divisor_primo, intersect, is_ample,
    is_big, is_cartier, is_nef, is_torsion, linear_equivalent, pl_function, principal_divisor,
    pullback, pushforward, self_intersection_smooth, span_rank, toric_divisor,
)
from utils.errores import ErrorDivisor
from utils.fan import (
    abanico_blowup_p2, abanico_fn, abanico_hirzebruch, abanico_p1xp1, abanico_p2,
    minimal_resolution, refinement,
)
from utils.fixtures import abanico_de, caso
from utils.lattice import LatticeVector


def test_intersecciones_en_P2():
    P2 = abanico_p2()
    H = divisor_primo(P2, (1, 0))
    assert intersect(H, H) == 1
    assert intersect(canonical_divisor(P2), canonical_divisor(P2)) == 9


def test_intersecciones_en_F_n():
    """La fibra por el punto singular de F_n tiene F^2 = 1/n"""
    for n in (2, 3, 5):
        X = abanico_fn(n)
        F0 = divisor_primo(X, (1, 0))
        S1 = divisor_primo(X, (0, -1))
        assert intersect(F0, F0) == Fraction(1, n)
        assert intersect(S1, S1) == n
        assert intersect(F0, S1) == 1


def test_autointerseccion_en_Sigma_n():
    Y = abanico_hirzebruch(3)
    C0 = divisor_primo(Y, (0, 1))
    f = divisor_primo(Y, (1, 0))
    assert intersect(C0, C0) == -3
    assert intersect(C0, f) == 1
    assert intersect(f, f) == 0


def test_cartier():
    X = abanico_fn(2)
    F0 = divisor_primo(X, (1, 0))
    assert not is_cartier(F0)
    assert is_cartier(2 * F0)
    assert is_cartier(canonical_divisor(abanico_hirzebruch(4)))


def test_nef_amplio_grande():
    P2 = abanico_p2()
    assert is_ample(divisor_primo(P2, (0, 1)))
    Y = abanico_hirzebruch(2)
    C0 = divisor_primo(Y, (0, 1))
    f = divisor_primo(Y, (1, 0))
    assert not is_nef(C0)
    assert is_nef(f) and not is_ample(f) and not is_big(f)
    assert is_big(C0 + 2 * f) and not is_ample(C0 + 2 * f)
    assert is_ample(C0 + 3 * f)


def test_clases_y_equivalencia():
    """-K ~ 3H en P^2 y -K ~ 2C0 + (n+2)f en Sigma_n"""
    P2 = abanico_p2()
    H = divisor_primo(P2, (1, 0))
    assert linear_equivalent(-canonical_divisor(P2), 3 * H)
    for n in range(1, 11):
        Y = abanico_hirzebruch(n)
        objetivo = 2 * divisor_primo(Y, (0, 1)) + (n + 2) * divisor_primo(Y, (1, 0))
        assert linear_equivalent(-canonical_divisor(Y), objetivo)
    Q = abanico_p1xp1()
    assert linear_equivalent(-canonical_divisor(Q), 2 * divisor_primo(Q, (1, 0)) + 2 * divisor_primo(Q, (0, 1)))


def test_equivalencia_solo_racional():
    # en P^2/Z3 los divisores primos difieren por torsión
    X = abanico_de(caso("4.1")["fan"])
    D1 = divisor_primo(X, (-2, 1))
    D2 = divisor_primo(X, (1, 1))
    assert linear_equivalent(D1, D2, over_Q=True)
    assert not linear_equivalent(D1, D2)


def test_principales_son_torsion():
    X = abanico_de(caso("4.2")["fan"])
    assert is_torsion(principal_divisor(X, (1, 2)))
    assert class_of(principal_divisor(X, (3, -1))).is_zero()
    assert not is_torsion(divisor_primo(X, (0, 1)))


def test_pullback_y_pushforward():
    P2 = abanico_p2()
    Y = abanico_blowup_p2()
    pi = refinement(Y, P2)
    H = divisor_primo(P2, (1, 0))
    levantado = pullback(H, pi)
    assert levantado.coeff((1, 1)) == 1
    assert pushforward(levantado, pi) == H
    X = abanico_de(caso("4.1")["fan"])
    Y, pi = minimal_resolution(X)
    K = canonical_divisor(X)
    # 4.1 es canónica con singularidades A2: K_Y = pi^* K_X
    assert pullback(K, pi) == canonical_divisor(Y)
    assert pushforward(pullback(K, pi), pi) == K


def test_rango_del_span():
    P2 = abanico_p2()
    H = divisor_primo(P2, (1, 0))
    assert span_rank([H, 2 * H, borde_torico(P2)]) == 1
    Q = abanico_p1xp1()
    assert span_rank([divisor_primo(Q, (1, 0)), divisor_primo(Q, (0, 1))]) == 2
    assert span_rank([]) == 0


def test_funcion_soporte_y_autointerseccion():
    P2 = abanico_p2()
    h = pl_function(divisor_primo(P2, (1, 0)))
    assert h.evaluate(LatticeVector(1, 0)) == -1
    assert h.evaluate(LatticeVector(0, 1)) == 0
    assert h.evaluate(LatticeVector(1, 1)) == -1
    Y = abanico_blowup_p2()
    assert self_intersection_smooth(Y, Y.index(LatticeVector(1, 1))) == -1
    assert self_intersection_smooth(P2, 0) == 1


def test_errores():
    P2 = abanico_p2()
    with pytest.raises(ErrorDivisor):
        toric_divisor(P2, {(1, 1): 1})
    with pytest.raises(ErrorDivisor):
        divisor_primo(P2, (1, 0)) + divisor_primo(abanico_p1xp1(), (1, 0))
    # E no es nef en el blow-up
    with pytest.raises(ErrorDivisor):
        b_nef(P2, abanico_blowup_p2(), {(1, 1): 1})
    # el modelo debe ser suave
    X = abanico_fn(2)
    with pytest.raises(ErrorDivisor):
        b_nef(X, X, {(0, -1): 1})


if __name__ == "__main__":
    pruebas = [
        test_intersecciones_en_P2, test_intersecciones_en_F_n, test_autointerseccion_en_Sigma_n,
        test_cartier, test_nef_amplio_grande, test_clases_y_equivalencia,
        test_equivalencia_solo_racional, test_principales_son_torsion, test_pullback_y_pushforward,
        test_rango_del_span, test_funcion_soporte_y_autointerseccion, test_errores,
    ]
    for numero, prueba in enumerate(pruebas, 1):
        prueba()
        print(f"Caso {numero} - {prueba.__doc__ or prueba.__name__} (esperado: OK)")
