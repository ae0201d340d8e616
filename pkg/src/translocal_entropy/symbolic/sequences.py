"""
As sequências u, v, w de aproximação exponencial em blocos fatoriais.

Os símbolos ficam armazenados com índice 0 na primeira posição após o ponto
decimal. v começa com o bloco "1" e segue com blocos de comprimento
j! − (j−1)! (j ≥ 2), alternando zeros (j par) e uns (j ímpar); u começa com
1^{2!} e, para j ≥ 3, usa blocos do mesmo comprimento que repetem uns
(j par) ou copiam o prefixo de v (j ímpar); w é a sequência nula.
"""
from __future__ import annotations

import math
from typing import Iterator

from translocal_entropy.phase_space.points import PhasePoint
from translocal_entropy.utils.constants import UVW_HORIZON_CAP
from translocal_entropy.utils.errors import ContractViolationError, HorizonExceededError

__status__ = 'Production'


def _block_lengths() -> Iterator[tuple[int, int]]:
    j = 2
    while True:
        yield j, math.factorial(j) - math.factorial(j - 1)
        j += 1


def _v_symbols(horizon: int) -> list[int]:
    symbols = [1]
    for j, length in _block_lengths():
        if len(symbols) >= horizon:
            break
        symbols.extend([j % 2] * length)
    return symbols[:horizon]


def _u_symbols(horizon: int, v: list[int]) -> list[int]:
    symbols = [1] * math.factorial(2)
    for j, length in _block_lengths():
        if j < 3:
            continue
        if len(symbols) >= horizon:
            break
        symbols.extend([1] * length if j % 2 == 0 else v[:length])
    return symbols[:horizon]


def make_uvw(horizon: int, two_sided: bool = False) -> tuple[PhasePoint, PhasePoint, PhasePoint]:
    """
    Constrói os prefixos de comprimento `horizon` de u, v e w.

    Args:
        horizon (int): Quantidade de símbolos futuros (1 ≤ horizon ≤ 9!).
        two_sided (bool, optional): Fixa o passado 1^∞ em u e v e 0^∞ em w
            (truncado em `horizon` símbolos). Defaults to False.

    Raises:
        ContractViolationError: Se `horizon` < 1.
        HorizonExceededError: Se `horizon` exceder o limite da aritmética de blocos.

    Returns:
        tuple[PhasePoint, PhasePoint, PhasePoint]: Os pontos simbólicos (u, v, w).
    """
    if horizon < 1:
        raise ContractViolationError(f' ERRO: Horizonte deve ser ≥ 1, recebido {horizon}.')
    if horizon > UVW_HORIZON_CAP:
        raise HorizonExceededError(UVW_HORIZON_CAP)
    v = _v_symbols(horizon)
    u = _u_symbols(horizon, v)
    ones_past = (1,) * horizon if two_sided else ()
    zeros_past = (0,) * horizon if two_sided else ()
    return (
        PhasePoint.symbolic(u, past=ones_past),
        PhasePoint.symbolic(v[:horizon], past=ones_past),
        PhasePoint.symbolic([0] * horizon, past=zeros_past),
    )

