"""
Complejidad tórica - verificador de complejidad generalizada
Punto de entrada de la línea de comandos
"""
import os
import sys

# Agregar el directorio raíz al path para importar módulos
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from ui.cli import ejecutar


def main():
    """Función principal"""
    sys.exit(ejecutar(sys.argv[1:]))


if __name__ == "__main__":
    main()
