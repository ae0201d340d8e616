"""
Execução de células de varredura independentes.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

from translocal_entropy.utils.settings import current_settings

__status__ = 'Production'

logger = logging.getLogger(__name__)


def run_cells[C, R](function: Callable[[C], R], cells: Sequence[C], workers: int | None = None) -> list[R]:
    """
    Avalia `function` em cada célula, possivelmente em paralelo.

    Os resultados são montados na ordem das células, qualquer que seja a
    ordem de conclusão, de modo que as varreduras são determinísticas.

    Args:
        function (Callable[[C], R]): Cálculo puro de uma célula.
        cells (Sequence[C]): As células.
        workers (int | None, optional): Número de threads. Defaults to
            `TRANSLOCAL_WORKERS`.

    Returns:
        list[R]: Os resultados, na ordem de `cells`.
    """
    threads = current_settings().workers if workers is None else workers
    logger.debug('Executando %d células com %d thread(s).', len(cells), threads)
    if threads <= 1 or len(cells) <= 1:
        return [function(cell) for cell in cells]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, cells))
