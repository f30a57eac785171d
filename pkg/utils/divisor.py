"""
Módulo de divisores tóricos
Funciones lineales a trozos, pullback y pushforward, tests de Cartier,
nef y amplio, clases de divisores e intersecciones de Mumford
"""
import functools
from dataclasses import dataclass
from fractions import Fraction

import sympy

from utils.errores import ErrorDivisor
from utils.fan import Fan, FanMorphism, minimal_resolution, refinement
from utils.lattice import det2, formatear_racional, pairing, racional, vector


@dataclass(frozen=True)
class ToricDivisor:
    """
    Divisor invariante sum c_rho D_rho.
    Los coeficientes van alineados con fan.rays.
    """
    fan: Fan
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != len(self.fan.rays):
            raise ErrorDivisor("Cantidad de coeficientes distinta a la de rayos")
        object.__setattr__(self, 'coeffs', tuple(Fraction(c) for c in self.coeffs))

    def coeff(self, v):
        return self.coeffs[self.fan.index(vector(v))]

    def items(self):
        return zip(self.fan.rays, self.coeffs)

    def support(self):
        return [v for v, c in self.items() if c != 0]

    def is_effective(self):
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def _mismo_abanico(self, otro):
        if self.fan != otro.fan:
            raise ErrorDivisor("Los divisores viven en abanicos distintos")

    def __add__(self, otro):
        self._mismo_abanico(otro)
        return ToricDivisor(self.fan, tuple(a + b for a, b in zip(self.coeffs, otro.coeffs)))

    def __sub__(self, otro):
        self._mismo_abanico(otro)
        return ToricDivisor(self.fan, tuple(a - b for a, b in zip(self.coeffs, otro.coeffs)))

    def __neg__(self):
        return ToricDivisor(self.fan, tuple(-a for a in self.coeffs))

    def __mul__(self, escalar):
        escalar = Fraction(escalar)
        return ToricDivisor(self.fan, tuple(escalar * a for a in self.coeffs))

    __rmul__ = __mul__

    def __le__(self, otro):
        self._mismo_abanico(otro)
        return all(a <= b for a, b in zip(self.coeffs, otro.coeffs))

    def __str__(self):
        terminos = [f"{formatear_racional(c)}*D({v})" for v, c in self.items() if c != 0]
        return " + ".join(terminos) if terminos else "0"


@dataclass(frozen=True)
class PLFunction:
    """Función soporte: una forma lineal racional m_sigma por cono (v_i, v_{i+1})"""
    fan: Fan
    m: tuple

    def evaluate(self, v):
        i = self.fan.cone_containing(v)
        return pairing(self.m[i], v)


@dataclass(frozen=True)
class DivisorClass:
    """Coordenadas de la clase en el cociente por las relaciones (longitud #rayos - 2)"""
    coords: tuple

    def is_zero(self):
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class BNefDivisor:
    """Divisor b-nef: divisor nef en un modelo suave que refina la base"""
    model: Fan
    morphism: FanMorphism
    divisor: ToricDivisor

    def __post_init__(self):
        if self.morphism.source != self.model or self.divisor.fan != self.model:
            raise ErrorDivisor("El divisor b-nef no vive en el modelo de su morfismo")
        if not self.model.is_smooth():
            raise ErrorDivisor(f"El modelo {self.model} no es suave")
        if not is_nef(self.divisor):
            raise ErrorDivisor(f"El divisor {self.divisor} no es nef en el modelo")

    @property
    def base(self):
        return self.morphism.target


# --- Construcción ---

def toric_divisor(fan, coeficientes=None):
    """
    Construye un divisor desde un diccionario {rayo: coeficiente}.
    Las claves ausentes valen 0; una clave que no es rayo es un error.
    """
    valores = [Fraction(0)] * len(fan.rays)
    for clave, valor in (coeficientes or {}).items():
        v = vector(clave)
        if v not in fan.rays:
            raise ErrorDivisor(f"({v}) no es un rayo de {fan}")
        valores[fan.index(v)] = racional(valor)
    return ToricDivisor(fan, tuple(valores))


def divisor_primo(fan, v):
    return toric_divisor(fan, {vector(v): 1})


def divisor_cero(fan):
    return toric_divisor(fan)


def borde_torico(fan):
    """Borde tórico: suma de todos los divisores invariantes"""
    return ToricDivisor(fan, tuple(Fraction(1) for _ in fan.rays))


def b_nef(base, model, coeficientes):
    """Divisor b-nef con modelo `model` sobre `base`"""
    D = toric_divisor(model, coeficientes) if isinstance(coeficientes, dict) else coeficientes
    return BNefDivisor(model=model, morphism=refinement(model, base), divisor=D)


def moduli_cero(base):
    Y, pi = minimal_resolution(base)
    return BNefDivisor(model=Y, morphism=pi, divisor=divisor_cero(Y))


# --- Operaciones ---

def canonical_divisor(X):
    return ToricDivisor(X, tuple(Fraction(-1) for _ in X.rays))


def _forma_en_cono(u, w, a, b):
    # m con <m,u> = a, <m,w> = b
    d = det2(u, w)
    return (Fraction(a * w.y - b * u.y, d), Fraction(b * u.x - a * w.x, d))


@functools.lru_cache(maxsize=None)
def pl_function(D):
    """
    Función lineal a trozos de D: en cada cono, m con <m, v_rho> = -coeff(rho).

    Returns:
        PLFunction: Formas lineales por cono
    """
    formas = []
    n = len(D.fan.rays)
    for i, (u, w) in enumerate(D.fan.cones()):
        formas.append(_forma_en_cono(u, w, -D.coeffs[i], -D.coeffs[(i + 1) % n]))
    return PLFunction(D.fan, tuple(formas))


def pullback(D, f):
    """Pullback por un refinamiento: coeficiente -h_D(e) en cada rayo e del origen"""
    if D.fan != f.target:
        raise ErrorDivisor("El divisor no vive en el destino del morfismo")
    h = pl_function(D)
    return ToricDivisor(f.source, tuple(-h.evaluate(e) for e in f.source.rays))


def pushforward(D, f):
    """Pushforward: descarta los coeficientes de los rayos excepcionales"""
    if D.fan != f.source:
        raise ErrorDivisor("El divisor no vive en el origen del morfismo")
    return ToricDivisor(f.target, tuple(D.coeff(v) for v in f.target.rays))


def self_intersection_smooth(X, i):
    """D_i^2 = -a_i donde v_{i-1} + v_{i+1} = a_i v_i (abanico suave)"""
    n = len(X.rays)
    return -det2(X.rays[(i - 1) % n], X.rays[(i + 1) % n])


def _producto_suave(X, c1, c2):
    n = len(X.rays)
    total = Fraction(0)
    for k in range(n):
        if c1[k] == 0:
            continue
        vecinos = c2[(k - 1) % n] + c2[(k + 1) % n]
        total += c1[k] * (vecinos + self_intersection_smooth(X, k) * c2[k])
    return total


@functools.lru_cache(maxsize=None)
def intersection_matrix(X):
    """
    Matriz D_i . D_j de los divisores invariantes de X, calculada en la
    resolución mínima (pullback de Mumford).
    """
    Y, pi = minimal_resolution(X)
    n = len(X.rays)
    levantados = []
    for i in range(n):
        base = ToricDivisor(X, tuple(Fraction(1 if j == i else 0) for j in range(n)))
        levantados.append(pullback(base, pi).coeffs)
    return tuple(
        tuple(_producto_suave(Y, levantados[i], levantados[j]) for j in range(n))
        for i in range(n)
    )


def intersect(D1, D2):
    if D1.fan != D2.fan:
        raise ErrorDivisor("Solo se intersecan divisores del mismo abanico")
    M = intersection_matrix(D1.fan)
    n = len(D1.fan.rays)
    return sum(
        (D1.coeffs[i] * M[i][j] * D2.coeffs[j]
         for i in range(n) if D1.coeffs[i] != 0
         for j in range(n) if D2.coeffs[j] != 0),
        Fraction(0),
    )


def grados_en_curvas(D):
    """Lista D . D_rho para cada rayo rho"""
    M = intersection_matrix(D.fan)
    n = len(D.fan.rays)
    return [sum((D.coeffs[i] * M[i][j] for i in range(n)), Fraction(0)) for j in range(n)]


def is_cartier(D):
    h = pl_function(D)
    return all(c.denominator == 1 for m in h.m for c in m)


def is_nef(D):
    return all(g >= 0 for g in grados_en_curvas(D))


def is_ample(D):
    return all(g > 0 for g in grados_en_curvas(D))


def is_big(D):
    """Para un divisor nef: grande si y solo si D^2 > 0"""
    return is_nef(D) and intersect(D, D) > 0


def principal_divisor(X, m):
    """div(m) = sum <m, v_rho> D_rho"""
    return ToricDivisor(X, tuple(Fraction(pairing(m, v)) for v in X.rays))


def _forma_normalizadora(D):
    # m que anula los coeficientes de los dos primeros rayos en D + div(m)
    u, w = D.fan.rays[0], D.fan.rays[1]
    return _forma_en_cono(u, w, -D.coeffs[0], -D.coeffs[1])


def class_of(D):
    """
    Clase de D: coeficientes de D + div(m) en los rayos 2..n-1, con m elegido
    para anular los dos primeros.
    """
    m = _forma_normalizadora(D)
    reducido = D + principal_divisor(D.fan, m)
    return DivisorClass(tuple(reducido.coeffs[2:]))


def linear_equivalent(D1, D2, over_Q=False):
    """
    D1 ~ D2 (sobre Z: existe m entero con D1 - D2 = div(m)); sobre Q basta m racional.
    """
    diferencia = D1 - D2
    if not class_of(diferencia).is_zero():
        return False
    if over_Q:
        return True
    m = _forma_normalizadora(diferencia)
    return all(c.denominator == 1 for c in m)


def matriz_sympy(filas):
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in fila] for fila in filas])


def span_rank(divisors):
    """Rango sobre Q de las clases de una lista de divisores del mismo abanico"""
    divisores = list(divisors)
    if not divisores:
        return 0
    fan = divisores[0].fan
    if any(D.fan != fan for D in divisores):
        raise ErrorDivisor("span_rank requiere divisores del mismo abanico")
    if len(fan.rays) == 2:
        return 0
    return matriz_sympy([class_of(D).coords for D in divisores]).rank()


def is_torsion(D):
    return class_of(D).is_zero()
