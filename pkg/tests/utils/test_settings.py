"""
Verificação da resolução de configurações a partir do ambiente e da
hierarquia de exceções.
"""
from __future__ import annotations

import unittest

from translocal_entropy.utils.constants import DEFAULT_POINT_BUDGET, DEFAULT_WORKERS
from translocal_entropy.utils.errors import (
    BudgetExceededError,
    ConfigError,
    ContractViolationError,
    HorizonExceededError,
    TranslocalError,
    UnbracketedError,
)
from translocal_entropy.utils.settings import Settings

__status__ = 'Verification'


class TestSettings(unittest.TestCase):

    def test_defaults_apply_when_environment_is_empty(self):
        """
        Verifica se um ambiente vazio produz os valores padrão.
        """
        sut = Settings.from_env({})

        self.assertEqual(sut.point_budget, DEFAULT_POINT_BUDGET)
        self.assertEqual(sut.workers, DEFAULT_WORKERS)
        self.assertEqual(sut.log_level, 'WARNING')

    def test_environment_overrides_are_read(self):
        """
        Verifica se as variáveis TRANSLOCAL_* sobrescrevem os padrões.
        """
        sut = Settings.from_env({
            'TRANSLOCAL_POINT_BUDGET': '1000',
            'TRANSLOCAL_WORKERS': '4',
            'TRANSLOCAL_LOG_LEVEL': 'debug',
        })

        self.assertEqual(sut.point_budget, 1000)
        self.assertEqual(sut.workers, 4)
        self.assertEqual(sut.log_level, 'DEBUG')

    def test_invalid_budget_raises_config_error(self):
        """
        Verifica se valores não inteiros ou não positivos levantam ConfigError.
        """
        with self.assertRaises(ConfigError) as context:
            Settings.from_env({'TRANSLOCAL_POINT_BUDGET': 'muitos'})
        self.assertEqual(context.exception.field, 'TRANSLOCAL_POINT_BUDGET')

        with self.assertRaises(ConfigError):
            Settings.from_env({'TRANSLOCAL_HORIZON_CAP': '0'})


class TestErrors(unittest.TestCase):

    def test_errors_keep_builtin_ancestry(self):
        """
        Verifica se as exceções derivam da raiz e da exceção nativa esperada.
        """
        self.assertTrue(issubclass(ContractViolationError, ValueError))
        self.assertTrue(issubclass(BudgetExceededError, RuntimeError))
        self.assertTrue(issubclass(HorizonExceededError, BudgetExceededError))
        self.assertTrue(issubclass(ConfigError, TranslocalError))

    def test_messages_carry_the_error_prefix(self):
        """
        Verifica se as mensagens seguem o prefixo ' ERRO:' e carregam os dados.
        """
        budget = BudgetExceededError(10)
        config = ConfigError('system', 'desconhecido', 7)
        unbracketed = UnbracketedError({0.0: 1.0, 1.0: 0.5})

        self.assertTrue(str(budget).startswith(' ERRO:'))
        self.assertEqual(budget.cap, 10)
        self.assertIn('linha 7', str(config))
        self.assertEqual(unbracketed.trends, {0.0: 1.0, 1.0: 0.5})


if __name__ == '__main__':
    unittest.main()
