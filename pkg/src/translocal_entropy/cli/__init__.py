"""
Execução em lote de experimentos: configuração, formas fechadas e relatórios.
"""
from translocal_entropy.cli.config import ExperimentConfig, ExperimentKind, RunConfig, load_config, parse_config
from translocal_entropy.cli.expectations import Expectation, expectation, kraft_expectation
from translocal_entropy.cli.report import ExperimentOutcome, ReportRow, RunReport, relative_error
from translocal_entropy.cli.runner import list_catalogue, run, run_experiment

__all__ = [
    'Expectation',
    'ExperimentConfig',
    'ExperimentKind',
    'ExperimentOutcome',
    'ReportRow',
    'RunConfig',
    'RunReport',
    'expectation',
    'kraft_expectation',
    'list_catalogue',
    'load_config',
    'parse_config',
    'relative_error',
    'run',
    'run_experiment',
]
