"""
Verificação das grades determinísticas de amostragem.
"""
from __future__ import annotations

import math
import unittest

import numpy as np

from translocal_entropy.phase_space.grids import estimate_grid_size, explicit_grid, sample_grid
from translocal_entropy.phase_space.points import BallSpec, MetricSpec, PhasePoint, SpaceKind, batch_distance
from translocal_entropy.utils.errors import BudgetExceededError, ContractViolationError

__status__ = 'Verification'


class TestSampleGrid(unittest.TestCase):

    def test_circle_grid_stays_inside_the_ball(self):
        """
        Verifica se todo ponto da grade pertence à bola e o tamanho estimado confere.
        """
        metric = MetricSpec(SpaceKind.CIRCLE)
        ball = BallSpec(PhasePoint.circle(0.95), 0.1)

        sut = sample_grid(ball, 0.01, metric)

        self.assertEqual(sut.count, 21)
        self.assertEqual(sut.count, estimate_grid_size(ball, 0.01, metric))
        self.assertTrue(all(ball.contains(point, metric) for point in sut.points))

    def test_whole_circle_is_an_even_lattice(self):
        """
        Verifica se a bola que cobre o círculo vira um reticulado uniforme.
        """
        metric = MetricSpec(SpaceKind.CIRCLE)

        sut = sample_grid(BallSpec(PhasePoint.circle(0.0), 0.5), 0.25, metric)

        np.testing.assert_allclose(sut.states[:, 0], [0.0, 0.25, 0.5, 0.75])

    def test_symbolic_grid_enumerates_compatible_words(self):
        """
        Verifica se a grade simbólica enumera as palavras com o prefixo da bola.
        """
        metric = MetricSpec(SpaceKind.SYMBOLIC, beta=2.0)
        ball = BallSpec(PhasePoint.symbolic([1, 0, 1, 1]), 0.5)

        sut = sample_grid(ball, 0.125, metric)

        self.assertEqual(sut.count, 4)
        self.assertTrue(np.all(sut.states[:, 0] == 1))

    def test_every_point_of_the_ball_is_within_resolution_of_the_grid(self):
        """
        Verifica, com amostras aleatórias, se a grade é uma rede de passo `resolution` da bola.
        """
        rng = np.random.default_rng(11)
        cases = {
            'circle': (
                MetricSpec(SpaceKind.CIRCLE), BallSpec(PhasePoint.circle(0.97), 0.1), 0.01,
                lambda: np.array([(0.97 + rng.uniform(-0.1, 0.1)) % 1.0]),
            ),
            'torus': (
                MetricSpec(SpaceKind.TORUS, dimension=2), BallSpec(PhasePoint.torus(0.2, 0.8), 0.1), 0.02,
                lambda: (np.array([0.2, 0.8]) + rng.uniform(-0.1, 0.1, size=2)) % 1.0,
            ),
            'interval': (
                MetricSpec(SpaceKind.INTERVAL), BallSpec(PhasePoint.interval(0.05), 0.1), 0.01,
                lambda: np.array([rng.uniform(0.0, 0.15)]),
            ),
            'disk': (
                MetricSpec(SpaceKind.DISK), BallSpec(PhasePoint.disk(0.5, 0.0), 0.2), 0.02,
                lambda: self._disk_sample(rng, 0.5, 0.2),
            ),
        }
        for name, (metric, ball, resolution, draw) in cases.items():
            with self.subTest(space=name):
                grid = sample_grid(ball, resolution, metric)
                samples = np.array([draw() for _ in range(1000)])

                gaps = batch_distance(samples[:, None, :], grid.states[None, :, :], metric).min(axis=1)

                self.assertLessEqual(float(gaps.max()), resolution + 1e-12)

    @staticmethod
    def _disk_sample(rng: np.random.Generator, center_x: float, radius: float) -> np.ndarray:
        length = radius * math.sqrt(rng.random())
        turn = 2.0 * math.pi * rng.random()
        x, y = center_x + length * math.cos(turn), length * math.sin(turn)
        return np.array([math.hypot(x, y), math.atan2(y, x) % (2.0 * math.pi)])

    def test_grid_larger_than_budget_is_refused(self):
        """
        Verifica se uma grade acima do orçamento levanta BudgetExceededError.
        """
        metric = MetricSpec(SpaceKind.TORUS, dimension=2)
        ball = BallSpec(PhasePoint.torus(0.5, 0.5), 0.5)

        with self.assertRaises(BudgetExceededError):
            sample_grid(ball, 0.001, metric, budget=1000)

    def test_resolution_above_radius_is_refused(self):
        """
        Verifica se resoluções maiores que o raio são recusadas.
        """
        metric = MetricSpec(SpaceKind.INTERVAL)

        with self.assertRaises(ContractViolationError):
            sample_grid(BallSpec(PhasePoint.interval(0.5), 0.1), 0.2, metric)

    def test_interval_grid_is_clipped_to_the_unit_interval(self):
        """
        Verifica se a grade do intervalo não sai de [0, 1].
        """
        metric = MetricSpec(SpaceKind.INTERVAL)

        sut = sample_grid(BallSpec(PhasePoint.interval(0.0), 0.1), 0.05, metric)

        np.testing.assert_allclose(sut.states[:, 0], [0.0, 0.05, 0.1])

    def test_explicit_grid_wraps_given_points(self):
        """
        Verifica se a grade explícita preserva os pontos na ordem dada.
        """
        metric = MetricSpec(SpaceKind.CIRCLE)
        points = [PhasePoint.circle(0.3), PhasePoint.circle(0.1)]

        sut = explicit_grid(points, metric)

        self.assertEqual(sut.points, tuple(points))


if __name__ == '__main__':
    unittest.main()
