"""
Módulo central para constantes de aplicação.

Este módulo serve como a Fonte Única da Verdade (SSoT) para valores
literais e de configuração partilhados pelos estimadores do pacote
`translocal_entropy`. Centralizar estas constantes aqui garante que o
cronograma padrão, os limites de orçamento e o formato dos relatórios
sejam os mesmos em toda a biblioteca e na CLI.

Constantes disponíveis::

    DEFAULT_N_VALUES: tuple[int, ...] = (6, ..., 14)
    DEFAULT_EPSILONS: tuple[float, ...] = (0.05, 0.02, 0.01)
    DEFAULT_POINT_BUDGET: int = 5_000_000
    DEFAULT_HORIZON_CAP: int = 4096
    REPORT_COLUMNS: tuple[str, ...] = ('experiment', ..., 'provenance')
    EXIT_PASS / EXIT_NUMERIC_FAIL / EXIT_CONFIG_ERROR: int = 0 / 1 / 2
"""
from __future__ import annotations

import math

__status__ = 'Production'

# Mensagens.
BUDGET_EXCEEDED_MESSAGE: str = ' ERRO: Orçamento de pontos excedido (limite = {cap}).'
HORIZON_EXCEEDED_MESSAGE: str = ' ERRO: Horizonte de órbita excedido (limite = {cap}).'
PADDING_WIDTH: int = 4

# Espaço de fases.
DEFAULT_SYMBOLIC_BETA: float = math.e
DISTANCE_TOLERANCE: float = 1e-12
LOG_RADIUS_TOLERANCE: float = 1e-9
TWO_PI: float = 2.0 * math.pi

# Orçamentos globais (sobrescritos por variáveis de ambiente em `settings`).
DEFAULT_POINT_BUDGET: int = 5_000_000
DEFAULT_HORIZON_CAP: int = 4096
DEFAULT_WORKERS: int = 1
DEFAULT_LOG_LEVEL: str = 'WARNING'

ENV_POINT_BUDGET: str = 'TRANSLOCAL_POINT_BUDGET'
ENV_HORIZON_CAP: str = 'TRANSLOCAL_HORIZON_CAP'
ENV_WORKERS: str = 'TRANSLOCAL_WORKERS'
ENV_LOG_LEVEL: str = 'TRANSLOCAL_LOG_LEVEL'

# Catálogo de mapas.
DEFAULT_STAIRCASE_LEVELS: int = 12
SINGULAR_SLOPE_TOLERANCE: float = 1e-9

# Cronograma padrão dos estimadores de taxa.
DEFAULT_N_VALUES: tuple[int, ...] = tuple(range(6, 15))
DEFAULT_EPSILONS: tuple[float, ...] = (0.05, 0.02, 0.01)
MIN_RATE_POINTS: int = 3
RATE_WINDOW: int = 3

# Medidas.
QMC_SAMPLE_SIZE: int = 4096
QMC_RELATIVE_ERROR_THRESHOLD: float = 0.25

# Pressão.
DEFAULT_COVER_DEPTH: int = 2
DEFAULT_BISECTION_TOLERANCE: float = 0.02
DEFAULT_S_GRID: tuple[float, ...] = (-1.0, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0)
DEFAULT_COVER_RADIUS: float = 0.1
DEFAULT_COVER_WINDOW: tuple[int, ...] = (5, 6, 7)
DEFAULT_AUDIT_SAMPLES: int = 8
AUDIT_TOLERANCE: float = 0.1

# Deslocamentos codificados e sequências uvw.
KRAFT_LOWER_BRACKET: float = 1e-12
KRAFT_DEFAULT_TOLERANCE: float = 1e-12
KRAFT_MAX_TERMS: int = 1_000_000
UVW_HORIZON_CAP: int = 362_880

# Relatórios da CLI.
REPORT_COLUMNS: tuple[str, ...] = (
    'experiment', 'system', 'point', 'n_min', 'n_max', 'epsilon', 'omega',
    's', 'potential', 'value', 'residual', 'expected', 'rel_error',
    'provenance',
)
DEFAULT_TOLERANCE: float = 0.10
REL_ERROR_FLOOR: float = 0.5
EXIT_PASS: int = 0
EXIT_NUMERIC_FAIL: int = 1
EXIT_CONFIG_ERROR: int = 2
