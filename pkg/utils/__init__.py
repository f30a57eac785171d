# Módulo de utilidades: red, abanicos, divisores, pares, complejidad y verificación
