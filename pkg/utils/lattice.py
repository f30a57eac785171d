"""
Módulo de aritmética exacta en la red Z^2
Vectores primitivos, determinantes y datos de Hirzebruch-Jung
para suavizar conos singulares
"""
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from utils.errores import ErrorRed

# Tipo racional exacto usado en todo el proyecto
Rational = Fraction


@dataclass(frozen=True, order=True)
class LatticeVector:
    """Vector entero del plano; como rayo de un abanico debe ser primitivo"""
    x: int
    y: int

    def __add__(self, otro):
        return LatticeVector(self.x + otro.x, self.y + otro.y)

    def __sub__(self, otro):
        return LatticeVector(self.x - otro.x, self.y - otro.y)

    def __neg__(self):
        return LatticeVector(-self.x, -self.y)

    def __mul__(self, escalar):
        return LatticeVector(escalar * self.x, escalar * self.y)

    __rmul__ = __mul__

    def como_tupla(self):
        return (self.x, self.y)

    def __str__(self):
        return f"{self.x},{self.y}"


def vector(x, y=None):
    """
    Construye un LatticeVector desde (x, y), una tupla/lista o el texto "x,y".

    Args:
        x: Entero, secuencia de dos enteros o texto "x,y"
        y: Entero (solo si x es entero)

    Returns:
        LatticeVector: El vector construido
    """
    if isinstance(x, LatticeVector):
        return x
    if y is not None:
        return LatticeVector(int(x), int(y))
    if isinstance(x, str):
        partes = x.replace('(', '').replace(')', '').split(',')
        if len(partes) != 2:
            raise ErrorRed(f"Vector inválido: '{x}'")
        try:
            return LatticeVector(int(partes[0]), int(partes[1]))
        except ValueError:
            raise ErrorRed(f"Vector inválido: '{x}'")
    if len(x) != 2:
        raise ErrorRed(f"Vector inválido: {x!r}")
    return LatticeVector(int(x[0]), int(x[1]))


def racional(valor):
    """
    Convierte enteros, textos "p/q" o Fraction en un racional exacto.
    Los float se rechazan: toda la aritmética es exacta.
    """
    if isinstance(valor, float):
        raise ErrorRed(f"Se esperaba un racional exacto, no un float: {valor}")
    try:
        return Fraction(valor)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ErrorRed(f"Racional inválido: {valor!r}")


def formatear_racional(q):
    """Texto exacto "p/q" (o "p" si es entero)"""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_primitive(v):
    return (v.x, v.y) != (0, 0) and math.gcd(v.x, v.y) == 1


def primitive(v):
    """
    Devuelve el vector primitivo en la dirección de v.

    Args:
        v: LatticeVector no nulo

    Returns:
        LatticeVector: v dividido por mcd(|x|, |y|)
    """
    if (v.x, v.y) == (0, 0):
        raise ErrorRed("El vector cero no define un rayo")
    g = math.gcd(v.x, v.y)
    return LatticeVector(v.x // g, v.y // g)


def det2(u, v):
    return u.x * v.y - u.y * v.x


def pairing(m, v):
    """Evalúa la forma lineal racional m = (m1, m2) en el vector v"""
    return m[0] * v.x + m[1] * v.y


def _semiplano(v):
    # 0 para ángulos en [0, pi), 1 para [pi, 2pi)
    if v.y > 0 or (v.y == 0 and v.x > 0):
        return 0
    return 1


def _comparar_angulo(u, v):
    su, sv = _semiplano(u), _semiplano(v)
    if su != sv:
        return su - sv
    d = det2(u, v)
    if d > 0:
        return -1
    if d < 0:
        return 1
    return 0


# Orden antihorario empezando en el semieje x positivo
clave_angular = functools.cmp_to_key(_comparar_angulo)


def ordenar_antihorario(vectores):
    return sorted(vectores, key=clave_angular)


def en_cono(v, u, w):
    """True si v está en el cono cerrado <u, w> (recorrido antihorario, det(u,w) > 0)"""
    return det2(u, v) >= 0 and det2(v, w) >= 0


def en_interior_relativo(v, u, w):
    """True si v está en el interior relativo del cono <u, w> (det(u,w) > 0)"""
    return det2(u, v) > 0 and det2(v, w) > 0


def coordenadas_en_cono(v, u, w):
    """
    Escribe v = s*u + t*w con s, t racionales.

    Returns:
        tuple: (s, t) como Fraction
    """
    d = det2(u, w)
    if d == 0:
        raise ErrorRed(f"Cono degenerado <{u}>, <{w}>")
    return Fraction(det2(v, w), d), Fraction(det2(u, v), d)


def euclides_extendido(a, b):
    """Devuelve (g, p, q) con p*a + q*b = g = mcd(a, b) >= 0"""
    p0, q0, p1, q1 = 1, 0, 0, 1
    while b != 0:
        c = a // b
        a, b = b, a - c * b
        p0, p1 = p1, p0 - c * p1
        q0, q1 = q1, q0 - c * q1
    if a < 0:
        return -a, -p0, -q0
    return a, p0, q0


def hj_continued_fraction(n, q):
    """
    Fracción continua de Hirzebruch-Jung n/q = b1 - 1/(b2 - 1/(...)).

    Args:
        n: Entero positivo
        q: Entero con 0 < q <= n

    Returns:
        list: Los enteros b_i >= 2 (o [n] si q = 1)
    """
    if not 0 < q <= n:
        raise ErrorRed(f"Fracción continua fuera de rango: {n}/{q}")
    coeficientes = []
    while q > 0:
        b = -(-n // q)
        coeficientes.append(b)
        n, q = q, b * q - n
    return coeficientes


def _suavizar_antihorario(u, v):
    d = det2(u, v)
    if d == 1:
        return []

    # p con det(u, p) = 1: u.x*p.y - u.y*p.x = 1
    g, a, b = euclides_extendido(u.x, -u.y)
    p = LatticeVector(b, a)

    # v = alfa*u + d*p; se corrige p para que v = d*w - k*u con 0 < k < d
    alfa = det2(v, p)
    t = -((-alfa) // d)
    k = t * d - alfa
    w = p + u * t

    rayos = [w]
    anterior, actual = u, w
    coeficientes = hj_continued_fraction(d, k)
    for b_i in coeficientes[:-1]:
        anterior, actual = actual, actual * b_i - anterior
        rayos.append(actual)
    if actual * coeficientes[-1] - anterior != v:
        raise ErrorRed(f"Suavizado inconsistente del cono <{u}>, <{v}>")
    return rayos


def cone_smoothing_rays(u, v):
    """
    Rayos interiores mínimos que vuelven unimodular el cono <u, v>.
    Se calculan con la fracción continua de Hirzebruch-Jung.

    Args:
        u: LatticeVector primitivo
        v: LatticeVector primitivo no paralelo a u

    Returns:
        list: Rayos primitivos ordenados desde u hacia v (vacía si det = ±1)
    """
    if not is_primitive(u) or not is_primitive(v):
        raise ErrorRed(f"Los rayos del cono deben ser primitivos: {u}, {v}")
    d = det2(u, v)
    if d == 0:
        raise ErrorRed(f"Cono degenerado: <{u}>, <{v}> son paralelos")
    if d > 0:
        return _suavizar_antihorario(u, v)
    return list(reversed(_suavizar_antihorario(v, u)))
