"""
Verificação das regiões, dos pesos de coberturas, do expoente crítico e da
auditoria entre pressões locais e globais.
"""
from __future__ import annotations

import math
import unittest

import numpy as np

from translocal_entropy.entropy.rates import Schedule
from translocal_entropy.maps.catalogue import get_system
from translocal_entropy.maps.potentials import PotentialSpec
from translocal_entropy.measures.descriptors import MeasureDescriptor
from translocal_entropy.phase_space.points import BallSpec, PhasePoint
from translocal_entropy.pressure.audit import ma_wen_audit, sample_region
from translocal_entropy.pressure.covers import (
    COVER_FAMILIES,
    CoverBuilder,
    CoverWeight,
    cover_contains,
    cover_weight,
    translocal_cover_weight,
)
from translocal_entropy.pressure.critical import ExponentVariant, critical_exponent, n_trend
from translocal_entropy.pressure.regions import RegionSpec
from translocal_entropy.utils.errors import ContractViolationError, UnbracketedError

__status__ = 'Verification'

WINDOW = (4, 5, 6)


def _region() -> RegionSpec:
    return RegionSpec(balls=(BallSpec(PhasePoint.circle(0.3), 0.05),))


def _synthetic(value: float, s: float, n: int) -> CoverWeight:
    return CoverWeight(
        value=value, s=s, radius=0.1, omega=None, n_min=n, potential='zero', family='uniform',
        centers=np.empty((0, 1)), levels=np.empty(0, dtype=np.int64), radii=np.empty(0),
        multiplicity=np.empty(0),
    )


class TestRegions(unittest.TestCase):

    def test_empty_region_is_rejected(self):
        """
        Verifica se uma região sem bolas nem pontos é recusada.
        """
        with self.assertRaises(ContractViolationError):
            RegionSpec()

    def test_union_and_space_checks(self):
        """
        Verifica a união de regiões e a recusa de espaços incompatíveis.
        """
        sut = _region().union(RegionSpec.from_points(PhasePoint.circle(0.8)))

        self.assertEqual(len(sut.balls), 1)
        self.assertEqual(len(sut.points), 1)
        sut.check_system(get_system('tripling'))
        with self.assertRaises(ContractViolationError):
            sut.check_system(get_system('sqrtmap'))
        with self.assertRaises(ContractViolationError):
            RegionSpec.from_points(PhasePoint.symbolic([0, 1])).check_system(get_system('fullshift:2'))

    def test_sample_region_keeps_explicit_points(self):
        """
        Verifica se a amostra inclui os pontos explícitos e pontos de Halton dentro da bola.
        """
        region = _region().union(RegionSpec.from_points(PhasePoint.circle(0.8)))

        sut = sample_region(get_system('tripling'), region, 4)

        self.assertEqual(len(sut), 5)
        self.assertEqual(sut[0], PhasePoint.circle(0.8))
        self.assertTrue(all(abs(p.coords[0] - 0.3) <= 0.05 for p in sut[1:]))


class TestCovers(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.system = get_system('tripling')
        cls.builder = CoverBuilder(cls.system, _region(), PotentialSpec.zero(), max(WINDOW) + 2, radius=0.1)

    def test_builder_needs_exactly_one_scale(self):
        """
        Verifica se o construtor exige exatamente um entre r e ω.
        """
        with self.assertRaises(ContractViolationError):
            CoverBuilder(self.system, _region(), PotentialSpec.zero(), 4)
        with self.assertRaises(ContractViolationError):
            CoverBuilder(self.system, _region(), PotentialSpec.zero(), 4, radius=0.1, omega=0.5)

    def test_weight_is_non_decreasing_in_n(self):
        """
        Verifica se, com o nível máximo fixo, o peso não decresce em N.
        """
        top = self.builder.max_level

        weights = [self.builder.weight(1.0, n, max_level=top).value for n in WINDOW]

        self.assertLessEqual(weights[0], weights[1] * (1.0 + 1e-12))
        self.assertLessEqual(weights[1], weights[2] * (1.0 + 1e-12))

    def test_best_cover_covers_the_sample(self):
        """
        Verifica se a cobertura escolhida contém toda a amostra e nada longe dela.
        """
        sut = self.builder.weight(1.0, 4)

        self.assertIn(sut.family, COVER_FAMILIES)
        self.assertTrue(np.all(sut.levels >= 4))
        self.assertTrue(cover_contains(self.system, sut, self.builder.surrogate.states))
        self.assertFalse(cover_contains(self.system, sut, np.array([[0.8]])))

    def test_standalone_cover_weight_matches_the_builder(self):
        """
        Verifica se `cover_weight` reproduz o peso do construtor com o mesmo nível máximo.
        """
        top = self.builder.max_level

        sut = cover_weight(self.system, _region(), PotentialSpec.zero(), 1.0, 0.1, 4, max_level=top)

        self.assertAlmostEqual(sut.value, self.builder.weight(1.0, 4, max_level=top).value)
        self.assertEqual(sut.radius, 0.1)

    def test_invalid_levels_are_rejected(self):
        """
        Verifica se níveis fora de [1, max_level] são recusados.
        """
        with self.assertRaises(ContractViolationError):
            self.builder.weight(1.0, 0)
        with self.assertRaises(ContractViolationError):
            self.builder.weight(1.0, self.builder.max_level)

    def test_translocal_cover_uses_metric_balls(self):
        """
        Verifica se a cobertura translocal usa bolas de raio e^{-ωn} e cobre a amostra.
        """
        sut = translocal_cover_weight(self.system, _region(), PotentialSpec.zero(), 0.5, 0.5, 3)

        self.assertIsNone(sut.radius)
        self.assertEqual(sut.omega, 0.5)
        np.testing.assert_allclose(sut.radii, np.exp(-0.5 * sut.levels))

    def test_critical_exponent_of_the_tripling(self):
        """
        Verifica se o expoente crítico fica perto de log 3 e se φ = −log|f'| o desloca por −log 3.
        """
        geometric = CoverBuilder(self.system, _region(), PotentialSpec.geometric(1.0), max(WINDOW) + 2, radius=0.1)

        zero = critical_exponent(self.builder.weight, WINDOW, s_grid=(-1.0, 0.0, 1.0, 2.0, 3.0))
        shifted = critical_exponent(geometric.weight, WINDOW, s_grid=(-3.0, -2.0, -1.0, 0.0, 1.0))

        self.assertAlmostEqual(zero.value, math.log(3.0), delta=0.4)
        self.assertAlmostEqual(shifted.value, zero.value - math.log(3.0), delta=0.1)
        self.assertIs(zero.variant, ExponentVariant.BOWEN_BALL)


class TestCriticalExponent(unittest.TestCase):

    def test_trend_variants(self):
        """
        Verifica a reta de mínimos quadrados e os envelopes de inclinações.
        """
        values, window = [0.0, 1.0, 3.0], [1, 2, 3]

        self.assertAlmostEqual(n_trend(values, window, ExponentVariant.BOWEN_BALL), 1.5)
        self.assertAlmostEqual(n_trend(values, window, ExponentVariant.TRANSLOCAL_UPPER), 2.0)
        self.assertAlmostEqual(n_trend(values, window, ExponentVariant.TRANSLOCAL_LOWER), 1.0)

    def test_synthetic_weights_cross_at_the_known_exponent(self):
        """
        Verifica se log M = (0.7 − s)·N tem expoente crítico 0.7.
        """
        def weigh(s, n):
            return _synthetic(math.exp((0.7 - s) * n), s, n)

        sut = critical_exponent(weigh, (2, 3, 4), s_grid=(0.0, 0.5, 1.0, 2.0))

        self.assertAlmostEqual(sut.value, 0.7, delta=0.02)
        self.assertLessEqual(sut.bracket[0], sut.value)
        self.assertGreaterEqual(sut.bracket[1], sut.value)
        self.assertGreater(sut.trends[0.5], 0.0)

    def test_missing_sign_change_is_reported(self):
        """
        Verifica se uma grade sem troca de sinal levanta UnbracketedError com as tendências.
        """
        def weigh(s, n):
            return _synthetic(math.exp((5.0 - s) * n), s, n)

        with self.assertRaises(UnbracketedError) as context:
            critical_exponent(weigh, (2, 3, 4), s_grid=(0.0, 1.0))

        self.assertEqual(set(context.exception.trends), {0.0, 1.0})

    def test_window_must_have_three_increasing_values(self):
        """
        Verifica a validação da janela de N.
        """
        with self.assertRaises(ContractViolationError):
            critical_exponent(lambda s, n: _synthetic(1.0, s, n), (2, 3))


class TestAudit(unittest.TestCase):

    def test_tripling_audit_passes_with_loose_tolerance(self):
        """
        Verifica a auditoria de Lebesgue sob o tripling com potencial nulo.
        """
        sut = ma_wen_audit(
            get_system('tripling'),
            MeasureDescriptor.lebesgue_circle(),
            PotentialSpec.zero(),
            _region(),
            Schedule((2, 3, 4), (0.05,)),
            samples=2,
            s_grid=(0.0, 0.5, 1.0, 1.5, 2.0),
            tolerance=0.5,
        )

        self.assertEqual(len(sut.points), 2)
        for value in sut.uppers + sut.lowers:
            self.assertAlmostEqual(value, math.log(3.0), places=6)
        self.assertTrue(sut.passed)
        self.assertEqual(len(sut.rows()), 7)

    def test_region_of_null_measure_is_rejected(self):
        """
        Verifica se μ(Z) = 0 é recusado.
        """
        with self.assertRaises(ContractViolationError):
            ma_wen_audit(
                get_system('tripling'),
                MeasureDescriptor.dirac(PhasePoint.circle(0.0)),
                PotentialSpec.zero(),
                RegionSpec(balls=(BallSpec(PhasePoint.circle(0.5), 0.1),)),
                Schedule((2, 3, 4)),
            )


if __name__ == '__main__':
    unittest.main()
