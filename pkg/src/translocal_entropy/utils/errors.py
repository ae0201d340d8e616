"""
Hierarquia de exceções do pacote `translocal_entropy`.

Cada classe deriva tanto da raiz `TranslocalError` quanto da exceção nativa
que o código chamador já esperaria (`ValueError`, `RuntimeError`,
`ArithmeticError`). Assim, blocos `except ValueError` escritos contra as
funções puras continuam válidos, e a CLI consegue distinguir falhas de
configuração de falhas numéricas pela raiz comum.
"""
from __future__ import annotations

from typing import Any

from translocal_entropy.utils.constants import (
    BUDGET_EXCEEDED_MESSAGE,
    HORIZON_EXCEEDED_MESSAGE,
)

__status__ = 'Production'


class TranslocalError(Exception):
    """
    Raiz de todas as exceções levantadas pela biblioteca.
    """


class ContractViolationError(TranslocalError, ValueError):
    """
    Pré-condição violada: espaços de fase incompatíveis, parâmetros fora
    do domínio ou sistema sem os dados exigidos pela operação.
    """


class BudgetExceededError(TranslocalError, RuntimeError):
    """
    Uma grade, enumeração ou cobertura excederia o limite configurado.

    Attributes:
        cap (int): O limite que teria sido ultrapassado.
    """

    def __init__(self, cap: int, message: str | None = None) -> None:
        self.cap = cap
        super().__init__(message or BUDGET_EXCEEDED_MESSAGE.format(cap=cap))


class HorizonExceededError(BudgetExceededError):
    """
    O comprimento de órbita pedido excede o horizonte configurado.
    """

    def __init__(self, cap: int) -> None:
        super().__init__(cap, HORIZON_EXCEEDED_MESSAGE.format(cap=cap))


class SingularOrbitError(TranslocalError, ArithmeticError):
    """
    A órbita atinge um ponto de não diferenciabilidade do mapa.

    Attributes:
        index (int): A iteração em que o ponto singular foi atingido.
        value (float): A coordenada atingida.
    """

    def __init__(self, index: int, value: float) -> None:
        self.index = index
        self.value = value
        super().__init__(
            f' ERRO: Órbita singular na iteração {index} (x = {value!r}); perturbe o ponto inicial.'
        )


class NoPositiveRootError(TranslocalError, ValueError):
    """
    A equação de Kraft não admite raiz positiva (F(0+) ≤ 1).
    """


class UnbracketedError(TranslocalError, ValueError):
    """
    Nenhuma mudança de sinal da tendência em N foi encontrada na grade de s.

    Attributes:
        trends (dict[float, float]): Tendência observada para cada s.
    """

    def __init__(self, trends: dict[float, float]) -> None:
        self.trends = dict(trends)
        report = ', '.join(f's={s:.4g}: {t:+.4g}' for s, t in sorted(trends.items()))
        super().__init__(f' ERRO: Expoente crítico fora da grade de s ({report}).')


class ConfigError(TranslocalError, ValueError):
    """
    Arquivo de configuração ou variável de ambiente inválida.

    Attributes:
        field (str): O campo com problema.
        line (int | None): Linha aproximada no arquivo, quando conhecida.
    """

    def __init__(self, field: str, message: str, line: int | None = None, **context: Any) -> None:
        self.field = field
        self.line = line
        self.context = context
        where = f' (linha {line})' if line is not None else ''
        super().__init__(f' ERRO: Campo "{field}"{where}: {message}')
