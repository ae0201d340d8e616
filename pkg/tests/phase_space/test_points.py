"""
Verificação dos pontos, métricas e bolas dos espaços de fase.

Cobre a normalização dos construtores, as métricas de cada espaço, a
pertinência em bolas abertas e fechadas e a leitura de pontos em texto.
"""
from __future__ import annotations

import math
import unittest

import numpy as np

from translocal_entropy.phase_space.points import (
    BallSpec,
    MetricSpec,
    PhasePoint,
    SpaceKind,
    array_to_points,
    ball_prefix_length,
    batch_distance,
    distance,
    parse_point,
    points_to_array,
)
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Verification'

CIRCLE = MetricSpec(SpaceKind.CIRCLE)
TORUS = MetricSpec(SpaceKind.TORUS, dimension=2)
SYMBOLIC = MetricSpec(SpaceKind.SYMBOLIC, beta=2.0)


class TestPhasePoint(unittest.TestCase):

    def test_circle_coordinates_are_reduced_mod_one(self):
        """
        Verifica se o construtor do círculo reduz a coordenada módulo 1.
        """
        sut = PhasePoint.circle(1.25)

        self.assertAlmostEqual(sut.coords[0], 0.25)

    def test_interval_rejects_points_outside_unit_interval(self):
        """
        Verifica se pontos fora de [0, 1] são recusados no intervalo.
        """
        with self.assertRaises(ContractViolationError):
            PhasePoint.interval(1.5)

    def test_disk_angle_is_reduced(self):
        """
        Verifica se o ângulo do disco é reduzido módulo 2π.
        """
        sut = PhasePoint.disk(0.5, 2.0 * math.pi + 1.0)

        self.assertAlmostEqual(sut.coords[1], 1.0)

    def test_shift_keeps_dropped_symbols_in_the_past_when_two_sided(self):
        """
        Verifica se o deslocamento bilateral move os símbolos para o passado.
        """
        sut = PhasePoint.symbolic([1, 0, 1, 1], past=[0])

        shifted = sut.shifted(2, two_sided=True)

        self.assertEqual(shifted.symbols, (1, 1))
        self.assertEqual(shifted.past, (0, 1, 0))
        self.assertEqual(shifted.symbol_at(-1), 0)

    def test_symbol_beyond_horizon_raises_index_error(self):
        """
        Verifica se o acesso além do horizonte levanta IndexError.
        """
        sut = PhasePoint.symbolic([1, 0])

        with self.assertRaises(IndexError):
            sut.symbol_at(2)


class TestDistance(unittest.TestCase):

    def test_circle_distance_wraps_around(self):
        """
        Verifica se a distância no círculo usa o menor arco.
        """
        sut = distance(PhasePoint.circle(0.05), PhasePoint.circle(0.95), CIRCLE)

        self.assertAlmostEqual(sut, 0.1)

    def test_torus_distance_is_the_coordinate_maximum(self):
        """
        Verifica se a métrica do toro é o máximo das distâncias coordenadas.
        """
        sut = distance(PhasePoint.torus(0.1, 0.2), PhasePoint.torus(0.3, 0.25), TORUS)

        self.assertAlmostEqual(sut, 0.2)

    def test_symbolic_distance_uses_first_disagreement(self):
        """
        Verifica se d(u, v) = β^{-m} com m o primeiro índice de discordância.
        """
        sut = distance(PhasePoint.symbolic([0, 1, 1, 0]), PhasePoint.symbolic([0, 1, 0, 0]), SYMBOLIC)

        self.assertAlmostEqual(sut, 2.0 ** -2)

    def test_metric_axioms_hold_on_random_triples(self):
        """
        Verifica simetria e desigualdade triangular em triplas aleatórias de cada espaço.
        """
        rng = np.random.default_rng(7)
        disk = MetricSpec(SpaceKind.DISK)
        samplers = {
            'circle': (CIRCLE, lambda: PhasePoint.circle(rng.random())),
            'torus': (TORUS, lambda: PhasePoint.torus(rng.random(), rng.random())),
            'disk': (disk, lambda: PhasePoint.disk(rng.random(), 2.0 * math.pi * rng.random())),
            'symbolic': (SYMBOLIC, lambda: PhasePoint.symbolic(rng.integers(0, 2, size=12).tolist())),
        }
        for name, (metric, draw) in samplers.items():
            with self.subTest(space=name):
                for _ in range(200):
                    a, b, c = draw(), draw(), draw()
                    self.assertEqual(distance(a, b, metric), distance(b, a, metric))
                    self.assertLessEqual(
                        distance(a, c, metric), distance(a, b, metric) + distance(b, c, metric) + 1e-12
                    )

    def test_mismatched_spaces_are_rejected(self):
        """
        Verifica se pontos de espaços distintos levantam ContractViolationError.
        """
        with self.assertRaises(ContractViolationError):
            distance(PhasePoint.circle(0.1), PhasePoint.interval(0.1), CIRCLE)

    def test_batch_distance_matches_scalar_distance(self):
        """
        Verifica se a distância vetorizada coincide com a escalar no toro.
        """
        first = [PhasePoint.torus(0.1, 0.9), PhasePoint.torus(0.5, 0.5)]
        second = [PhasePoint.torus(0.95, 0.85), PhasePoint.torus(0.1, 0.45)]

        sut = batch_distance(points_to_array(first, TORUS), points_to_array(second, TORUS), TORUS)

        expected = [distance(a, b, TORUS) for a, b in zip(first, second)]
        np.testing.assert_allclose(sut, expected)


class TestBalls(unittest.TestCase):

    def test_closed_ball_contains_its_boundary(self):
        """
        Verifica se a bola fechada contém o bordo e a aberta não.
        """
        center = PhasePoint.circle(0.5)
        boundary = PhasePoint.circle(0.75)

        self.assertTrue(BallSpec(center, 0.25).contains(boundary, CIRCLE))
        self.assertFalse(BallSpec(center, 0.25, closed=False).contains(boundary, CIRCLE))

    def test_ball_requires_positive_radius(self):
        """
        Verifica se raios não positivos são recusados.
        """
        with self.assertRaises(ContractViolationError):
            BallSpec(PhasePoint.circle(0.5), 0.0)

    def test_prefix_length_of_symbolic_balls(self):
        """
        Verifica quantos símbolos uma bola simbólica fixa.
        """
        center = PhasePoint.symbolic([0, 1, 1, 0, 1])

        closed = ball_prefix_length(BallSpec(center, 2.0 ** -3), SYMBOLIC)
        opened = ball_prefix_length(BallSpec(center, 2.0 ** -3, closed=False), SYMBOLIC)

        self.assertEqual(closed, 3)
        self.assertEqual(opened, 4)

    def test_array_round_trip_preserves_points(self):
        """
        Verifica se a conversão para arrays e de volta preserva os pontos.
        """
        points = [PhasePoint.torus(0.1, 0.2), PhasePoint.torus(0.7, 0.3)]

        sut = array_to_points(points_to_array(points, TORUS), TORUS)

        self.assertEqual(sut, tuple(points))


class TestParsePoint(unittest.TestCase):

    def test_circle_point_accepts_fractions(self):
        """
        Verifica se frações como 2/3 são aceitas no círculo.
        """
        sut = parse_point('2/3', CIRCLE)

        self.assertAlmostEqual(sut.coords[0], 2.0 / 3.0)

    def test_torus_point_requires_matching_dimension(self):
        """
        Verifica se o número de coordenadas do toro é conferido.
        """
        self.assertEqual(parse_point('0.1, 0.2', TORUS), PhasePoint.torus(0.1, 0.2))
        with self.assertRaises(ContractViolationError):
            parse_point('0.1', TORUS)

    def test_two_sided_symbolic_point(self):
        """
        Verifica a leitura `passado|futuro` de sequências simbólicas.
        """
        sut = parse_point('10|0111', SYMBOLIC)

        self.assertEqual(sut.symbols, (0, 1, 1, 1))
        self.assertEqual(sut.past, (1, 0))

    def test_garbage_is_a_contract_violation(self):
        """
        Verifica se textos inválidos levantam ContractViolationError.
        """
        with self.assertRaises(ContractViolationError):
            parse_point('abc', CIRCLE)


if __name__ == '__main__':
    unittest.main()
