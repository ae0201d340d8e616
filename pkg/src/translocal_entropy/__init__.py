"""
translocal_entropy: estimadores numéricos de entropia local e translocal,
entropias de Brin–Katok e pressão de Carathéodory, validados contra fórmulas
fechadas para um catálogo de sistemas dinâmicos.
"""
__version__ = '1.0.0'
