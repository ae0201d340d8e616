"""
Verificação da leitura de configuração, do despacho dos experimentos, dos
relatórios e dos códigos de saída da CLI.
"""
from __future__ import annotations

import contextlib
import io
import json
import math
import tempfile
import unittest
from pathlib import Path

from translocal_entropy.cli.config import ExperimentKind, load_config, parse_config
from translocal_entropy.cli.expectations import expectation, kraft_expectation
from translocal_entropy.cli.main import build_parser, main
from translocal_entropy.cli.report import ExperimentOutcome, ReportRow, RunReport, relative_error
from translocal_entropy.cli.runner import list_catalogue, run, run_experiment
from translocal_entropy.cli.tables import render_box
from translocal_entropy.maps.catalogue import get_system
from translocal_entropy.phase_space.points import PhasePoint
from translocal_entropy.utils.constants import (
    EXIT_CONFIG_ERROR,
    EXIT_NUMERIC_FAIL,
    EXIT_PASS,
    REPORT_COLUMNS,
)
from translocal_entropy.utils.errors import ConfigError

__status__ = 'Verification'

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0

KRAFT_CONFIG = """
[experiment golden]
kind = kraft
lengths = 1, 2

[output]
csv = out/report.csv
json = out/summary.json
"""


def _row(value: float, expected: float | None) -> ReportRow:
    fields = dict(
        experiment='x', system='tripling', point='0.1', n_min=2, n_max=4, epsilon=0.05,
        omega=None, s=None, potential='zero', value=value, residual=0.0,
    )
    if expected is None:
        return ReportRow(**fields)
    return ReportRow(**fields, expected=expected, rel_error=relative_error(value, expected))


class TestConfig(unittest.TestCase):

    def test_valid_file_is_parsed_in_order(self):
        """
        Verifica a leitura de dois experimentos e dos caminhos de saída relativos.
        """
        text = """
[experiment b]
kind = restricted-entropy
system = fullshift:2
points = 0
radius = 1.0
n_values = 3, 4, 5, 6
epsilons = 0.25

[experiment a]
kind = translocal
system = tripling
points = 0.1; 2/3
omegas = 0.2, 0.5

[output]
csv = report.csv
"""
        sut = parse_config(text, Path('/tmp/base'))

        self.assertEqual([e.name for e in sut.experiments], ['experiment b', 'experiment a'])
        self.assertIs(sut.experiments[0].kind, ExperimentKind.RESTRICTED_ENTROPY)
        self.assertEqual(sut.experiments[0].schedule.n_values, (3, 4, 5, 6))
        self.assertEqual(sut.experiments[1].omegas, (0.2, 0.5))
        self.assertEqual(sut.experiments[1].points[1], PhasePoint.circle(2.0 / 3.0))
        self.assertEqual(sut.csv_path, Path('/tmp/base/report.csv'))
        self.assertIsNone(sut.json_path)

    def test_regions_are_combined(self):
        """
        Verifica a união de uma bola com pontos explícitos na região.
        """
        text = """
[experiment p]
kind = pressure
system = tripling
region = ball:0.3:0.05 + points:0.8;0.9
"""
        sut = parse_config(text).experiments[0].region

        self.assertEqual(len(sut.balls), 1)
        self.assertEqual(len(sut.points), 2)

    def test_errors_name_the_field_and_the_line(self):
        """
        Verifica o campo e a linha relatados nos erros de configuração.
        """
        cases = [
            ('[experiment x]\nsystem = tripling\n', 'kind', 1),
            ('[experiment x]\nkind = entropy\n', 'kind', 2),
            ('[experiment x]\nkind = lyapunov\nsystem = doubling\npoints = 0.1\n', 'system', 3),
            ('[experiment x]\nkind = lyapunov\nsystem = tripling\n', 'points', 1),
            ('[experiment x]\nkind = translocal\nsystem = tripling\npoints = 0.1\n', 'omegas', 1),
            ('[experiment x]\nkind = brin-katok\nsystem = tripling\npoints = 0.1\n', 'measure', 1),
            ('[experiment x]\nkind = kraft\n', 'lengths', 1),
            ('[experiment x]\nkind = pressure\nsystem = tripling\n', 'region', 1),
            ('[experiment x]\nkind = lyapunov\nsystem = tripling\npoints = 0.1\nn_values = 3, 2, 4\n', 'n_values', 5),
        ]
        for text, field, line in cases:
            with self.subTest(text=text):
                with self.assertRaises(ConfigError) as context:
                    parse_config(text)
                self.assertEqual(context.exception.field, field)
                self.assertEqual(context.exception.line, line)

    def test_unknown_system_is_reported(self):
        """
        Verifica se um sistema desconhecido aparece na mensagem de erro.
        """
        with self.assertRaises(ConfigError) as context:
            parse_config('[experiment x]\nkind = lyapunov\nsystem = doubling\npoints = 0.1\n')

        self.assertIn('doubling', str(context.exception))
        self.assertTrue(str(context.exception).startswith(' ERRO:'))

    def test_file_without_experiments_is_rejected(self):
        """
        Verifica se um arquivo sem seções de experimento é recusado.
        """
        with self.assertRaises(ConfigError) as context:
            parse_config('[output]\ncsv = a.csv\n')

        self.assertEqual(context.exception.field, 'experiment')

    def test_unreadable_file_is_reported(self):
        """
        Verifica o erro de arquivo inexistente.
        """
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ConfigError) as context:
                load_config(Path(directory) / 'missing.ini')

        self.assertEqual(context.exception.field, 'arquivo')


class TestExpectations(unittest.TestCase):

    def test_registered_closed_forms(self):
        """
        Verifica algumas formas fechadas do registro.
        """
        tripling = get_system('tripling')

        self.assertAlmostEqual(expectation('lyapunov', tripling, PhasePoint.circle(0.1)).value, math.log(3.0))
        self.assertAlmostEqual(expectation('restricted-entropy', get_system('fullshift:2')).value, math.log(2.0))
        self.assertIsNone(expectation('translocal', tripling, PhasePoint.circle(0.1)))
        self.assertIsNone(expectation('unknown', tripling))

    def test_kraft_closed_forms(self):
        """
        Verifica log φ para {1, 2}, log k / L para comprimentos iguais e a ausência nos demais casos.
        """
        self.assertAlmostEqual(kraft_expectation([2, 1]).value, math.log(GOLDEN_RATIO))
        self.assertAlmostEqual(kraft_expectation([2, 2, 2]).value, math.log(3.0) / 2.0)
        self.assertIsNone(kraft_expectation([1, 3]))


class TestReport(unittest.TestCase):

    def test_relative_error_uses_a_floor(self):
        """
        Verifica o piso 0.5 no denominador do erro relativo.
        """
        self.assertAlmostEqual(relative_error(1.1, 1.0), 0.1)
        self.assertAlmostEqual(relative_error(0.1, 0.0), 0.2)

    def test_row_verdicts(self):
        """
        Verifica o veredito de linhas com e sem valor esperado.
        """
        self.assertTrue(_row(1.05, 1.0).passes(0.1))
        self.assertFalse(_row(1.5, 1.0).passes(0.1))
        self.assertIsNone(_row(1.5, None).passes(0.1))

    def test_outcome_verdicts(self):
        """
        Verifica os vereditos de experimentos sem conferência, com erro e reprovados.
        """
        unchecked = ExperimentOutcome('a', 'lyapunov', 0.1, rows=[_row(1.0, None)])
        failed = ExperimentOutcome('b', 'lyapunov', 0.1, error='falhou')
        wrong = ExperimentOutcome('c', 'lyapunov', 0.1, rows=[_row(2.0, 1.0)])

        self.assertIsNone(unchecked.passed)
        self.assertFalse(failed.passed)
        self.assertFalse(wrong.passed)
        self.assertTrue(RunReport([unchecked]).passed)
        self.assertFalse(RunReport([unchecked, wrong]).passed)

    def test_csv_has_fixed_columns(self):
        """
        Verifica o cabeçalho e as células do CSV.
        """
        report = RunReport([ExperimentOutcome('a', 'lyapunov', 0.1, rows=[_row(1.0, 1.0)])])

        sut = report.to_csv().splitlines()

        self.assertEqual(sut[0], ','.join(REPORT_COLUMNS))
        self.assertEqual(len(sut), 2)
        self.assertEqual(sut[1].split(',')[REPORT_COLUMNS.index('value')], '1')
        self.assertEqual(sut[1].split(',')[REPORT_COLUMNS.index('omega')], '')

    def test_summary_keys(self):
        """
        Verifica as chaves do resumo JSON.
        """
        sut = RunReport([ExperimentOutcome('a', 'lyapunov', 0.1, rows=[_row(1.0, 1.0)])]).to_summary()

        self.assertEqual(set(sut), {'passed', 'incomplete', 'experiments'})
        self.assertEqual(sut['experiments']['a']['checked'], 1)

    def test_render_box_frames_the_rows(self):
        """
        Verifica a moldura da tabela.
        """
        sut = render_box('Título', [('a', 'bb'), ('ccc', 'd')]).splitlines()

        self.assertTrue(sut[0].startswith('╔'))
        self.assertTrue(sut[-1].startswith('╚'))
        self.assertEqual(len(sut), 6)
        self.assertEqual(len({len(line) for line in sut}), 1)


class TestRunner(unittest.TestCase):

    def test_kraft_experiment_matches_the_golden_ratio(self):
        """
        Verifica a linha de um experimento de Kraft com comprimentos {1, 2}.
        """
        config = parse_config(KRAFT_CONFIG)

        sut = run_experiment(config.experiments[0])

        self.assertTrue(sut.passed)
        self.assertEqual(sut.rows[0].system, 'kraft:1,2')
        self.assertAlmostEqual(sut.rows[0].value, math.log(GOLDEN_RATIO), places=9)

    def test_exact_symbolic_experiment_passes(self):
        """
        Verifica um experimento de entropia restrita no deslocamento completo.
        """
        config = parse_config("""
[experiment shift]
kind = restricted-entropy
system = fullshift:2
points = 0
radius = 1.0
n_values = 3, 4, 5, 6
epsilons = 0.25
""")
        sut = run_experiment(config.experiments[0])

        self.assertTrue(sut.passed)
        self.assertAlmostEqual(sut.rows[0].rel_error, 0.0)

    def test_budget_marks_the_experiment_incomplete(self):
        """
        Verifica se um orçamento pequeno interrompe a cobertura sem reprovar o experimento.
        """
        config = parse_config("""
[experiment covers]
kind = pressure
system = tripling
region = ball:0.3:0.1
omegas = 2
n_window = 4, 5, 6
budget = 100
""")
        sut = run_experiment(config.experiments[0])

        self.assertTrue(sut.incomplete)
        self.assertIsNone(sut.error)
        self.assertIsNot(sut.passed, False)

    def test_singular_orbit_fails_the_experiment(self):
        """
        Verifica se uma órbita que atinge um ponto singular reprova o experimento.
        """
        config = parse_config('[experiment x]\nkind = lyapunov\nsystem = g3branch\npoints = 1/2\n')

        sut = run_experiment(config.experiments[0])

        self.assertIsNotNone(sut.error)
        self.assertFalse(sut.passed)

    def test_run_writes_csv_and_json(self):
        """
        Verifica a gravação dos relatórios nos caminhos da seção [output].
        """
        with tempfile.TemporaryDirectory() as directory:
            config = parse_config(KRAFT_CONFIG, Path(directory))

            sut = run(config)

            csv_text = (Path(directory) / 'out' / 'report.csv').read_text(encoding='utf-8')
            summary = json.loads((Path(directory) / 'out' / 'summary.json').read_text(encoding='utf-8'))

        self.assertTrue(sut.passed)
        self.assertTrue(csv_text.startswith('experiment,system,point'))
        self.assertTrue(summary['passed'])
        self.assertIn('experiment golden', summary['experiments'])

    def test_rerun_writes_a_byte_identical_csv(self):
        """
        Verifica se duas execuções da mesma configuração gravam o mesmo CSV, byte a byte.
        """
        text = KRAFT_CONFIG.replace('[output]', """[experiment shift]
kind = restricted-entropy
system = fullshift:2
points = 0
radius = 1.0
n_values = 3, 4, 5, 6
epsilons = 0.25

[experiment tripling]
kind = translocal
system = tripling
points = 0.1; 2/3
omegas = 0.2, 0.5
n_values = 4, 5, 6
epsilons = 0.05

[output]""")
        with tempfile.TemporaryDirectory() as directory:
            config = parse_config(text, Path(directory))
            report = Path(directory) / 'out' / 'report.csv'

            run(config)
            first = report.read_bytes()
            run(config)
            second = report.read_bytes()

        self.assertEqual(first, second)
        self.assertGreater(first.count(b'\n'), 3)

    def test_only_filters_the_experiments(self):
        """
        Verifica se `only` restringe a execução a um tipo.
        """
        sut = run(parse_config(KRAFT_CONFIG.split('[output]')[0]), only=ExperimentKind.AUDIT)

        self.assertEqual(sut.outcomes, [])

    def test_catalogue_lists_systems_measures_and_potentials(self):
        """
        Verifica as três tabelas do catálogo.
        """
        sut = list_catalogue()

        for name in ('Sistemas', 'Medidas', 'Potenciais', 'tripling', 'pomeau-manneville', 'staircase'):
            self.assertIn(name, sut)


class TestMain(unittest.TestCase):

    def test_parser_requires_a_command(self):
        """
        Verifica se a CLI exige um subcomando.
        """
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                build_parser().parse_args([])

    def test_list_command(self):
        """
        Verifica a saída e o código de `list`.
        """
        output = io.StringIO()
        with contextlib.redirect_stdout(output):
            sut = main(['list'])

        self.assertEqual(sut, EXIT_PASS)
        self.assertIn('tripling', output.getvalue())

    def test_configuration_error_exit_code(self):
        """
        Verifica o código 2 e a mensagem em stderr para um sistema desconhecido.
        """
        errors = io.StringIO()
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'bad.ini'
            path.write_text('[experiment x]\nkind = lyapunov\nsystem = doubling\npoints = 0.1\n', encoding='utf-8')
            with contextlib.redirect_stderr(errors), contextlib.redirect_stdout(io.StringIO()):
                sut = main(['run', str(path)])

        self.assertEqual(sut, EXIT_CONFIG_ERROR)
        self.assertIn('doubling', errors.getvalue())

    def test_run_exit_codes(self):
        """
        Verifica o código 0 para um arquivo aprovado e 1 para uma falha numérica.
        """
        with tempfile.TemporaryDirectory() as directory:
            good = Path(directory) / 'good.ini'
            good.write_text(KRAFT_CONFIG, encoding='utf-8')
            bad = Path(directory) / 'bad.ini'
            bad.write_text('[experiment x]\nkind = lyapunov\nsystem = g3branch\npoints = 1/2\n', encoding='utf-8')
            with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
                passed = main(['run', str(good)])
                failed = main(['run', str(bad)])
                audit_only = main(['audit', str(good)])

            self.assertTrue((Path(directory) / 'out' / 'report.csv').exists())

        self.assertEqual(passed, EXIT_PASS)
        self.assertEqual(failed, EXIT_NUMERIC_FAIL)
        self.assertEqual(audit_only, EXIT_PASS)


if __name__ == '__main__':
    unittest.main()
