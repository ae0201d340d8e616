"""
Resolução das configurações de execução a partir do ambiente.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping

from translocal_entropy.utils.constants import (
    DEFAULT_HORIZON_CAP,
    DEFAULT_LOG_LEVEL,
    DEFAULT_POINT_BUDGET,
    DEFAULT_WORKERS,
    ENV_HORIZON_CAP,
    ENV_LOG_LEVEL,
    ENV_POINT_BUDGET,
    ENV_WORKERS,
)
from translocal_entropy.utils.errors import ConfigError

__status__ = 'Production'


@dataclass(frozen=True)
class Settings:
    """
    Limites globais de execução.

    Attributes:
        point_budget (int): Máximo de pontos em uma grade de amostragem.
        horizon_cap (int): Máximo de iterações em uma órbita.
        workers (int): Threads usadas para células de varredura.
        log_level (str): Nível de log aplicado pela CLI.
    """
    point_budget: int = DEFAULT_POINT_BUDGET
    horizon_cap: int = DEFAULT_HORIZON_CAP
    workers: int = DEFAULT_WORKERS
    log_level: str = DEFAULT_LOG_LEVEL

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> Settings:
        """
        Lê as variáveis `TRANSLOCAL_*`, aplicando os padrões ausentes.

        Args:
            environ (Mapping[str, str] | None, optional): Ambiente a ser lido.
                Defaults to `os.environ`.

        Raises:
            ConfigError: Se algum valor não for um inteiro positivo.

        Returns:
            Settings: As configurações resolvidas.
        """
        env = os.environ if environ is None else environ
        return cls(
            point_budget=_positive_int(env, ENV_POINT_BUDGET, DEFAULT_POINT_BUDGET),
            horizon_cap=_positive_int(env, ENV_HORIZON_CAP, DEFAULT_HORIZON_CAP),
            workers=_positive_int(env, ENV_WORKERS, DEFAULT_WORKERS),
            log_level=env.get(ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL).upper(),
        )


def _positive_int(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(name, f'inteiro esperado, recebido {raw!r}.') from None
    if value <= 0:
        raise ConfigError(name, f'valor deve ser positivo, recebido {value}.')
    return value


def current_settings() -> Settings:
    """
    Retorna as configurações vigentes (relidas a cada chamada).
    """
    return Settings.from_env()
