# Módulo UI: línea de comandos del verificador tórico
