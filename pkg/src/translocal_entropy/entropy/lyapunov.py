"""
Expoentes de Lyapunov, fórmula fechada tóral e taxas de aproximação.
"""
from __future__ import annotations

import logging
import math
from typing import Sequence

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.dynamics import evaluate, log_derivative_profile, toral_eigen_data
from translocal_entropy.phase_space.points import PhasePoint, distance
from translocal_entropy.utils.constants import MIN_RATE_POINTS
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)


def lyapunov_exponent(system: SystemDescriptor, point: PhasePoint, n: int) -> tuple[float, float]:
    """
    Envelopes superior e inferior de (1/m)·log|Df^m(x)| na metade final de m ≤ n.

    Em automorfismos do toro devolve o maior log-módulo dos autovalores.

    Raises:
        ContractViolationError: Se n < 3 ou não houver regra de derivada.
        SingularOrbitError: Se a órbita atingir um ponto singular.

    Returns:
        tuple[float, float]: (superior, inferior).
    """
    if system.is_toral:
        top = math.log(toral_eigen_data(system)[0][0])
        return top, top
    if n < MIN_RATE_POINTS:
        raise ContractViolationError(f' ERRO: n deve ser ≥ {MIN_RATE_POINTS}, recebido {n}.')
    profile = log_derivative_profile(system, point, n)
    averages = [total / m for m, total in enumerate(profile, start=1)]
    tail = averages[n // 2:]
    return max(tail), min(tail)


def toral_translocal(eigen_data: Sequence[tuple[float, int]], omega: float) -> float:
    """
    Σ (log|λ_i| − ω) sobre os autovalores com log|λ_i| ≥ ω, com multiplicidade.
    """
    return sum(
        multiplicity * (math.log(modulus) - omega)
        for modulus, multiplicity in eigen_data
        if modulus > 0.0 and math.log(modulus) >= omega
    )


def approach_rate(
    system: SystemDescriptor,
    u: PhasePoint,
    v: PhasePoint,
    k_max: int,
) -> list[tuple[int, float]]:
    """
    A sequência −(1/k)·log d(f^k u, v) para k = 1, ..., k_max.

    Em espaços contínuos, f^k u = v dá o marcador +∞. Em espaços
    simbólicos, concordância em todo o horizonte comum só garante
    d ≤ β^{-m}, com m o comprimento comparado; a taxa relatada é a cota
    finita m·log β / k e um aviso de truncamento é registrado.

    Raises:
        ContractViolationError: Se k_max < 1 ou o horizonte simbólico de u
            não alcançar k_max.
    """
    if k_max < 1:
        raise ContractViolationError(f' ERRO: k_max deve ser ≥ 1, recebido {k_max}.')
    if system.is_symbolic and u.horizon <= k_max:
        raise ContractViolationError(f' ERRO: Horizonte de u ({u.horizon}) insuficiente para k_max = {k_max}.')
    rates = []
    current = u
    for k in range(1, k_max + 1):
        current = evaluate(system, current)
        gap = distance(current, v, system.metric)
        if gap > 0.0:
            rates.append((k, -math.log(gap) / k))
        elif system.is_symbolic:
            compared = _compared_length(current, v, system.metric.two_sided)
            logger.warning(' Taxa truncada em k = %d: sem discordância nos %d símbolos comparados.', k, compared)
            rates.append((k, compared * math.log(system.metric.beta) / k))
        else:
            rates.append((k, math.inf))
    return rates


def _compared_length(a: PhasePoint, b: PhasePoint, two_sided: bool) -> int:
    future = min(len(a.symbols), len(b.symbols))
    if not two_sided:
        return future
    return min(future, min(len(a.past), len(b.past)) + 1)


def running_supremum(rates: Sequence[tuple[int, float]]) -> list[tuple[int, float]]:
    """
    O supremo acumulado de uma sequência de taxas.
    """
    best = -math.inf
    result = []
    for k, rate in rates:
        best = max(best, rate)
        result.append((k, best))
    return result
