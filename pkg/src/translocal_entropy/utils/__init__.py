"""
Constantes, exceções e configurações compartilhadas.
"""
