"""
Deslocamentos codificados, equação de Kraft e as sequências u, v, w.
"""
from translocal_entropy.symbolic.families import CodeWordFamily, GapKind, binary_word, parse_family
from translocal_entropy.symbolic.kraft import KraftSolution, kraft_entropy
from translocal_entropy.symbolic.language import FlowerAutomaton, admissible_words, coded_language_count, is_admissible
from translocal_entropy.symbolic.sequences import make_uvw

__all__ = [
    'CodeWordFamily',
    'FlowerAutomaton',
    'GapKind',
    'KraftSolution',
    'admissible_words',
    'binary_word',
    'coded_language_count',
    'is_admissible',
    'kraft_entropy',
    'make_uvw',
    'parse_family',
]
