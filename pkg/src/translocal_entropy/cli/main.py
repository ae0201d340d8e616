"""
Ponto de entrada `translocal`.

Subcomandos::

    translocal run <config>     executa os experimentos e grava CSV/JSON
    translocal list             lista sistemas, medidas e potenciais
    translocal audit <config>   executa só as auditorias e mostra as tabelas

Saídas: 0 (todas as conferências passaram), 1 (falha numérica ou valor
fora da tolerância), 2 (configuração inválida).
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from translocal_entropy.cli.config import ExperimentKind, load_config
from translocal_entropy.cli.runner import list_catalogue, run
from translocal_entropy.cli.tables import render_box
from translocal_entropy.utils.constants import EXIT_CONFIG_ERROR, EXIT_NUMERIC_FAIL, EXIT_PASS
from translocal_entropy.utils.errors import ConfigError
from translocal_entropy.utils.settings import current_settings

__status__ = 'Production'

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='translocal',
        description='Estimadores de entropia translocal, pressões locais e coberturas de Carathéodory.',
    )
    parser.add_argument('--log-level', default=None, help='nível de log (padrão: TRANSLOCAL_LOG_LEVEL ou WARNING)')
    commands = parser.add_subparsers(dest='command', required=True)
    run_parser = commands.add_parser('run', help='executa um arquivo de experimentos')
    run_parser.add_argument('config', help='arquivo INI de experimentos')
    commands.add_parser('list', help='lista o catálogo')
    audit_parser = commands.add_parser('audit', help='executa só as auditorias de um arquivo')
    audit_parser.add_argument('config', help='arquivo INI de experimentos')
    return parser


def _configure_logging(level: str | None) -> None:
    name = (level or current_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )


def _execute(path: str, only: ExperimentKind | None) -> int:
    config = load_config(path)
    report = run(config, only=only)
    for outcome in report.outcomes:
        for title, rows in outcome.tables:
            print(render_box(title, rows))
    print(render_box('Resumo da execução', report.table_rows()))
    if report.incomplete:
        print(' Aviso: orçamento excedido; relatório parcial marcado como incompleto.')
    return EXIT_PASS if report.passed else EXIT_NUMERIC_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    """
    Executa a CLI e devolve o código de saída.

    Args:
        argv (Sequence[str] | None, optional): Argumentos (padrão: `sys.argv[1:]`).

    Returns:
        int: 0, 1 ou 2.
    """
    parser = build_parser()
    arguments = parser.parse_args(argv)
    try:
        _configure_logging(arguments.log_level)
        match arguments.command:
            case 'list':
                print(list_catalogue())
                return EXIT_PASS
            case 'run':
                return _execute(arguments.config, None)
            case 'audit':
                return _execute(arguments.config, ExperimentKind.AUDIT)
    except ConfigError as error:
        print(str(error), file=sys.stderr)
        return EXIT_CONFIG_ERROR
    return EXIT_CONFIG_ERROR


if __name__ == '__main__':
    sys.exit(main())
