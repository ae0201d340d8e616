"""
Tabelas com moldura de caixa para a saída humana da CLI.
"""
from __future__ import annotations

from typing import Sequence

from translocal_entropy.utils.constants import PADDING_WIDTH

__status__ = 'Production'


def render_box(title: str, rows: Sequence[Sequence[str]]) -> str:
    """
    Monta uma tabela com título centralizado e colunas alinhadas à esquerda.

    Args:
        title (str): O título.
        rows (Sequence[Sequence[str]]): As linhas, todas com o mesmo número
            de colunas.

    Returns:
        str: A tabela, pronta para `print`.
    """
    columns = max((len(row) for row in rows), default=0)
    widths = [max((len(str(row[i])) for row in rows), default=0) for i in range(columns)]
    lines = [' │ '.join(f'{str(cell):<{widths[i]}}' for i, cell in enumerate(row)) for row in rows]
    content_width = max([len(title)] + [len(line) for line in lines])
    internal_width = content_width + PADDING_WIDTH

    output = [
        f'╔{"═" * internal_width}╗',
        f'║{title:^{internal_width}}║',
        f'╠{"═" * internal_width}╣',
    ]
    for line in lines:
        padded_line = f'  {line}'
        output.append(f'║{padded_line:<{internal_width}}║')
    output.append(f'╚{"═" * internal_width}╝')
    return '\n'.join(output)
