"""
Verificação da avaliação de órbitas, derivadas, itinerários e do teste de
invariância por comprimento de pré-imagens.
"""
from __future__ import annotations

import math
import unittest

import numpy as np

from translocal_entropy.maps.catalogue import get_system
from translocal_entropy.maps.dynamics import (
    evaluate,
    itinerary,
    log_derivative_profile,
    log_derivative_sum,
    orbit,
    orbit_array,
    preimage_length,
    toral_eigen_data,
)
from translocal_entropy.maps.rules import Branch, PiecewiseRule, StaircaseRule, affine_branch
from translocal_entropy.phase_space.points import PhasePoint
from translocal_entropy.utils.errors import ContractViolationError, SingularOrbitError

__status__ = 'Verification'

GOLDEN_SQUARED = (3.0 + math.sqrt(5.0)) / 2.0


class TestOrbits(unittest.TestCase):

    def test_tripling_orbit(self):
        """
        Verifica a órbita de 0.1 pelo tripling: 0.1, 0.3, 0.9.
        """
        sut = orbit(get_system('tripling'), PhasePoint.circle(0.1), 3)

        np.testing.assert_allclose([p.coords[0] for p in sut], [0.1, 0.3, 0.9], atol=1e-12)

    def test_orbit_array_matches_pointwise_orbit(self):
        """
        Verifica se a órbita vetorizada coincide com a ponto a ponto.
        """
        system = get_system('g3branch')
        point = PhasePoint.circle(0.1)

        sut = orbit_array(system, np.array([[0.1]]), 4)

        expected = [p.coords[0] for p in orbit(system, point, 4)]
        np.testing.assert_allclose(sut[0, :, 0], expected)

    def test_evaluate_rejects_points_from_other_spaces(self):
        """
        Verifica se pontos de outro espaço são recusados.
        """
        with self.assertRaises(ContractViolationError):
            evaluate(get_system('tripling'), PhasePoint.interval(0.1))

    def test_non_positive_orbit_length_is_refused(self):
        """
        Verifica se n < 1 levanta ContractViolationError.
        """
        with self.assertRaises(ContractViolationError):
            orbit(get_system('tripling'), PhasePoint.circle(0.1), 0)

    def test_disk_center_is_fixed(self):
        """
        Verifica se o centro do disco é ponto fixo.
        """
        sut = evaluate(get_system('disk'), PhasePoint.disk(0.0, 0.0))

        self.assertEqual(sut.coords[0], 0.0)


class TestDerivatives(unittest.TestCase):

    def test_tripling_log_derivative_is_n_log3(self):
        """
        Verifica se log|Df^n| = n·log 3 no tripling.
        """
        sut = log_derivative_sum(get_system('tripling'), PhasePoint.circle(0.1), 5)

        self.assertAlmostEqual(sut, 5.0 * math.log(3.0))

    def test_three_branch_profile_follows_the_branches(self):
        """
        Verifica o perfil de g ao longo de 0.1 → 0.2 → 0.4 → 0.8 (inclinações 2, 2, 2, 4).
        """
        sut = log_derivative_profile(get_system('g3branch'), PhasePoint.circle(0.1), 4)

        np.testing.assert_allclose(sut, [math.log(2.0), 2 * math.log(2.0), 3 * math.log(2.0), 5 * math.log(2.0)])

    def test_orbit_through_a_corner_is_singular(self):
        """
        Verifica se atingir o ponto de quebra de g levanta SingularOrbitError.
        """
        with self.assertRaises(SingularOrbitError) as context:
            log_derivative_sum(get_system('g3branch'), PhasePoint.circle(0.25), 3)

        self.assertEqual(context.exception.index, 1)

    def test_iterate_derivative_uses_the_chain_rule(self):
        """
        Verifica se a derivada do iterado é o produto das derivadas.
        """
        sut = log_derivative_sum(get_system('iterate:2:g3branch'), PhasePoint.circle(0.1), 2)

        self.assertAlmostEqual(sut, 5.0 * math.log(2.0))

    def test_interval_endpoints_are_singular_only_where_the_slope_degenerates(self):
        """
        Verifica os extremos de regras de intervalo: x² é singular em 0 e regular em 1; a identidade em nenhum.
        """
        square = PiecewiseRule(
            [Branch(0.0, 1.0, formula=lambda x: x ** 2, slope=lambda x: 2.0 * x)], periodic=False, lipschitz=2.0
        )
        identity = PiecewiseRule([affine_branch(0.0, 1.0, 1.0, 0.0)], periodic=False, lipschitz=1.0)
        states = np.array([[0.0], [0.5], [1.0]])

        self.assertEqual(square.singular_mask(states).tolist(), [True, False, False])
        self.assertEqual(identity.singular_mask(states).tolist(), [False, False, False])

    def test_cat_map_eigen_data(self):
        """
        Verifica os módulos dos autovalores do gato de Arnold.
        """
        sut = toral_eigen_data(get_system('toral:[[2,1],[1,1]]'))

        self.assertEqual(len(sut), 2)
        self.assertAlmostEqual(sut[0][0], GOLDEN_SQUARED)
        self.assertAlmostEqual(sut[1][0], 1.0 / GOLDEN_SQUARED)
        self.assertEqual(sut[0][1], 1)

    def test_identity_matrix_groups_multiplicity(self):
        """
        Verifica se autovalores repetidos são agrupados com multiplicidade.
        """
        sut = toral_eigen_data(get_system('toral:[[1,0],[0,1]]'))

        self.assertEqual(sut, [(1.0, 2)])


class TestItineraryAndInvariance(unittest.TestCase):

    def test_fixed_point_itinerary(self):
        """
        Verifica se o ponto fixo 2/3 de g tem itinerário constante no ramo central.
        """
        sut = itinerary(get_system('g3branch'), PhasePoint.circle(2.0 / 3.0), 5)

        self.assertEqual(sut.symbols, (1, 1, 1, 1, 1))

    def test_itinerary_of_a_periodic_orbit(self):
        """
        Verifica o itinerário de 0.1 sob g.
        """
        sut = itinerary(get_system('g3branch'), PhasePoint.circle(0.1), 5)

        self.assertEqual(sut.symbols, (0, 0, 0, 2, 0))

    def test_lebesgue_is_preserved_by_full_branch_maps(self):
        """
        Verifica se f^{-1}(A) tem o comprimento de A para tripling e g.
        """
        for identifier in ('tripling', 'g3branch'):
            with self.subTest(identifier=identifier):
                sut = preimage_length(get_system(identifier), 0.2, 0.5)
                self.assertAlmostEqual(sut, 0.3)

    def test_nonlinear_maps_have_no_preimage_test(self):
        """
        Verifica se mapas não lineares por partes são recusados.
        """
        with self.assertRaises(ContractViolationError):
            preimage_length(get_system('pomeau-manneville'), 0.2, 0.5)


class TestStaircase(unittest.TestCase):

    def test_levels_of_the_staircase(self):
        """
        Verifica os níveis (2^{-m}, 2^{1-m}] e o corte abaixo do último nível.
        """
        sut = StaircaseRule(levels=12)

        levels = sut.level_of(np.array([1.0, 0.75, 0.5, 0.3, 1e-6]))

        np.testing.assert_array_equal(levels, [1, 1, 2, 2, 0])

    def test_each_level_is_invariant(self):
        """
        Verifica se o mapa leva cada nível em si mesmo.
        """
        sut = StaircaseRule(levels=12)
        states = np.array([[0.55], [0.8], [0.3], [0.42], [0.13]])

        image = sut.apply(states)

        np.testing.assert_array_equal(sut.level_of(image[:, 0]), sut.level_of(states[:, 0]))

    def test_laps_have_alternating_slopes(self):
        """
        Verifica se o nível m tem 2m+1 laps de inclinação ±(2m+1).
        """
        sut = StaircaseRule(levels=12).laps(2)

        self.assertEqual(len(sut), 5)
        self.assertEqual([lap[2] for lap in sut], [5.0, -5.0, 5.0, -5.0, 5.0])


if __name__ == '__main__':
    unittest.main()
