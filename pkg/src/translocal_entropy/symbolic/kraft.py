"""
Entropia de deslocamentos codificados pela equação de Kraft.

A entropia h é a única raiz positiva de F(h) = Σ_k e^{-h·L_k} − 1, onde L_k
são os comprimentos das palavras-código. F é estritamente decrescente, então
a raiz é localizada por bissecção (`scipy.optimize.bisect`). Para famílias
infinitas a série é truncada e a cauda é limitada por uma série geométrica
nos incrementos de comprimento.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import optimize

from translocal_entropy.symbolic.families import CodeWordFamily
from translocal_entropy.utils.constants import (
    KRAFT_DEFAULT_TOLERANCE,
    KRAFT_LOWER_BRACKET,
    KRAFT_MAX_TERMS,
)
from translocal_entropy.utils.errors import ContractViolationError, NoPositiveRootError

__status__ = 'Production'

logger = logging.getLogger(__name__)

_FLOAT_LENGTH_CAP = 1e300


@dataclass(frozen=True)
class KraftSolution:
    """
    Resultado do solucionador de Kraft.

    Attributes:
        h (float): A entropia (raiz positiva).
        residual (float): |F(h)| mais o limite da cauda truncada.
        truncation_index (int): Número de comprimentos efetivamente somados.
        truncation_error (float): Limite superior da cauda omitida.
    """
    h: float
    residual: float
    truncation_index: int
    truncation_error: float


def _length_array(lengths: Sequence[int] | CodeWordFamily) -> tuple[np.ndarray, bool]:
    if isinstance(lengths, CodeWordFamily):
        finite = lengths.is_finite
        bounded = itertools.takewhile(lambda length: length <= _FLOAT_LENGTH_CAP, lengths.lengths())
        raw = list(itertools.islice(bounded, KRAFT_MAX_TERMS))
    else:
        finite = True
        raw = list(lengths)
    if any(length < 1 for length in raw):
        raise ContractViolationError(' ERRO: Comprimentos de palavras-código devem ser ≥ 1.')
    array = np.array([float(min(length, _FLOAT_LENGTH_CAP)) for length in raw])
    return array, finite


def _tail_bound(h: float, lengths: np.ndarray, finite: bool) -> float:
    if finite or lengths.size < 2:
        return 0.0
    increment = max(lengths[-1] - lengths[-2], 1.0)
    next_length = lengths[-1] + increment
    return math.exp(-h * next_length) / -math.expm1(-h * increment)


def kraft_entropy(
    lengths: Sequence[int] | CodeWordFamily,
    tol: float = KRAFT_DEFAULT_TOLERANCE,
) -> KraftSolution:
    """
    Resolve Σ_k e^{-h·L_k} = 1 por bissecção.

    Args:
        lengths (Sequence[int] | CodeWordFamily): Os comprimentos (lista
            finita, com repetições) ou uma família geradora.
        tol (float, optional): Tolerância absoluta em h.
            Defaults to KRAFT_DEFAULT_TOLERANCE.

    Raises:
        ContractViolationError: Se não houver comprimentos ou algum for < 1.
        NoPositiveRootError: Se F(0+) ≤ 0, isto é, Σ_k 1 ≤ 1.

    Returns:
        KraftSolution: A raiz e o diagnóstico de truncamento.
    """
    array, finite = _length_array(lengths)
    if array.size == 0:
        raise ContractViolationError(' ERRO: Nenhum comprimento de palavra-código informado.')

    def kraft(h: float) -> float:
        return float(np.sum(np.exp(-h * array))) - 1.0

    if kraft(KRAFT_LOWER_BRACKET) <= 0.0:
        raise NoPositiveRootError(
            f' ERRO: A equação de Kraft não tem raiz positiva (F(0+) = {kraft(KRAFT_LOWER_BRACKET) + 1.0:.6g}).'
        )
    upper = 1.0
    while kraft(upper) > 0.0:
        upper *= 2.0
    root = float(optimize.bisect(kraft, KRAFT_LOWER_BRACKET, upper, xtol=tol))
    tail = _tail_bound(root, array, finite)
    residual = abs(kraft(root)) + tail
    logger.debug('Kraft: h = %.12g (termos = %d, cauda ≤ %.3g).', root, array.size, tail)
    return KraftSolution(h=root, residual=residual, truncation_index=int(array.size), truncation_error=tail)
