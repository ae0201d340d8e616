"""
Verificação da distância de Bowen, da contagem de conjuntos separados e do
planejamento das grades.
"""
from __future__ import annotations

import unittest

import numpy as np

from translocal_entropy.maps.catalogue import coded_shift, full_shift, get_system
from translocal_entropy.phase_space.grids import explicit_grid, sample_grid
from translocal_entropy.phase_space.points import BallSpec, PhasePoint
from translocal_entropy.separated.counting import (
    EXACT_SYMBOLIC,
    GREEDY,
    SeparationQuery,
    bowen_distance,
    required_resolution,
    separated_count,
    separation_length,
    symbolic_word_count,
)
from translocal_entropy.separated.greedy import conflict_graph, greedy_independent_set, orbit_embedding
from translocal_entropy.separated.planning import expansion_bound, plan_grid
from translocal_entropy.symbolic.families import parse_family
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Verification'


class TestBowenDistance(unittest.TestCase):

    def test_bowen_distance_is_the_orbit_maximum(self):
        """
        Verifica se d_n é o máximo das distâncias ao longo das órbitas.
        """
        sut = bowen_distance(get_system('tripling'), PhasePoint.circle(0.1), PhasePoint.circle(0.11), 3)

        self.assertAlmostEqual(sut, 0.09)

    def test_single_step_is_the_base_metric(self):
        """
        Verifica se d_1 coincide com a métrica de base.
        """
        sut = bowen_distance(get_system('tripling'), PhasePoint.circle(0.05), PhasePoint.circle(0.95), 1)

        self.assertAlmostEqual(sut, 0.1)


class TestSeparatedCount(unittest.TestCase):

    def test_separated_sets_grow_like_three_to_the_n(self):
        """
        Verifica se a contagem gulosa do tripling cresce aproximadamente por 3^n.
        """
        system = get_system('tripling')
        grid = sample_grid(BallSpec(PhasePoint.circle(0.0), 0.5), 0.002, system.metric)

        first = separated_count(SeparationQuery(system, grid, 1, 0.1))
        third = separated_count(SeparationQuery(system, grid, 3, 0.1))

        self.assertEqual(first.method, GREEDY)
        self.assertTrue(5 <= first.count <= 10)
        self.assertGreater(third.count, 5 * first.count)
        self.assertFalse(third.flagged)

    def test_coarse_grid_is_flagged(self):
        """
        Verifica se uma grade mais grossa que ε·L^{-(n-1)} gera aviso.
        """
        system = get_system('tripling')
        grid = sample_grid(BallSpec(PhasePoint.circle(0.0), 0.5), 0.01, system.metric)

        sut = separated_count(SeparationQuery(system, grid, 5, 0.1))

        self.assertTrue(sut.flagged)

    def test_symbolic_count_is_the_number_of_windows(self):
        """
        Verifica a contagem exata: 2^{n−1+c} janelas no deslocamento completo.
        """
        system = full_shift(2, beta=2.0)
        grid = sample_grid(BallSpec(PhasePoint.symbolic([0]), 1.0), 2.0 ** -4, system.metric)

        sut = separated_count(SeparationQuery(system, grid, 3, 0.25))

        self.assertEqual(sut.method, EXACT_SYMBOLIC)
        self.assertEqual(sut.count, 16)
        self.assertFalse(sut.flagged)

    def test_coded_shift_grid_and_count_stay_in_the_language(self):
        """
        Verifica se a grade de {0, 01} só contém palavras sem "11" e se a
        contagem exata coincide com a linguagem codificada.
        """
        system = coded_shift(parse_family('words:0,01'), beta=2.0)
        grid = sample_grid(BallSpec(PhasePoint.symbolic([0]), 1.0), 2.0 ** -6, system.metric)

        short = separated_count(SeparationQuery(system, grid, 3, 0.25))
        long = separated_count(SeparationQuery(system, grid, 5, 0.25))

        self.assertEqual(grid.states.shape, (21, 6))
        self.assertFalse(np.any((grid.states[:, 1:] == 1) & (grid.states[:, :-1] == 1)))
        self.assertEqual(short.count, system.language_count((), 4))
        self.assertEqual(short.count, 8)
        self.assertEqual(long.count, 21)
        self.assertFalse(long.flagged)

    def test_symbolic_count_is_monotone_in_the_set_and_in_epsilon(self):
        """
        Verifica se a contagem exata cresce com o conjunto e quando ε diminui.
        """
        system = full_shift(2, beta=2.0)
        whole = sample_grid(BallSpec(PhasePoint.symbolic([0]), 1.0), 2.0 ** -8, system.metric)
        cylinder = sample_grid(BallSpec(PhasePoint.symbolic([1, 0]), 0.25), 2.0 ** -8, system.metric)

        counts = [separated_count(SeparationQuery(system, whole, 3, eps)).count for eps in (0.5, 0.25, 0.125)]
        inner = separated_count(SeparationQuery(system, cylinder, 3, 0.25)).count

        self.assertEqual(counts, sorted(counts))
        self.assertLess(counts[0], counts[-1])
        self.assertLessEqual(inner, counts[1])

    def test_greedy_count_is_monotone_in_the_set_and_in_epsilon(self):
        """
        Verifica a monotonia em K e em ε da contagem gulosa sob a identidade.
        """
        system = get_system('identity')
        wide = sample_grid(BallSpec(PhasePoint.circle(0.5), 0.3), 0.001, system.metric)
        narrow = sample_grid(BallSpec(PhasePoint.circle(0.5), 0.1), 0.001, system.metric)

        counts = [separated_count(SeparationQuery(system, wide, 2, eps)).count for eps in (0.1, 0.05, 0.02)]
        inner = separated_count(SeparationQuery(system, narrow, 2, 0.05)).count

        self.assertEqual(counts, sorted(counts))
        self.assertLess(counts[0], counts[-1])
        self.assertLess(inner, counts[1])

    def test_separation_length(self):
        """
        Verifica c para separação estrita e não estrita com ε = β^{-2}.
        """
        self.assertEqual(separation_length(0.25, 2.0, strict=True), 2)
        self.assertEqual(separation_length(0.25, 2.0, strict=False), 3)

    def test_query_validates_its_parameters(self):
        """
        Verifica se n < 1 ou ε ≤ 0 são recusados.
        """
        system = get_system('tripling')
        grid = explicit_grid([PhasePoint.circle(0.1)], system.metric)

        with self.assertRaises(ContractViolationError):
            SeparationQuery(system, grid, 0, 0.1)
        with self.assertRaises(ContractViolationError):
            SeparationQuery(system, grid, 1, 0.0)

    def test_required_resolution(self):
        """
        Verifica ε·L^{-(n-1)} e o caso sem constante de Lipschitz finita.
        """
        self.assertAlmostEqual(required_resolution(get_system('tripling'), 3, 0.1), 0.1 / 9.0)
        self.assertEqual(required_resolution(get_system('sqrtmap'), 3, 0.1), 0.0)

    def test_symbolic_word_count(self):
        """
        Verifica o número de palavras do deslocamento completo em 3 símbolos.
        """
        self.assertEqual(symbolic_word_count(full_shift(3), 2), 9)


class TestGreedy(unittest.TestCase):

    def test_independent_set_on_a_path(self):
        """
        Verifica o conjunto independente guloso do caminho 0–1–2 e os donos.
        """
        system = get_system('identity')
        embedding = orbit_embedding(system, np.array([[0.0], [0.05], [0.1]]), 1)

        admitted, owner = greedy_independent_set(conflict_graph(embedding, 0.06))

        np.testing.assert_array_equal(admitted, [0, 2])
        np.testing.assert_array_equal(owner, [0, 0, 2])

    def test_periodic_embedding_wraps(self):
        """
        Verifica se o grafo do círculo reconhece vizinhos através de 0.
        """
        system = get_system('identity')
        embedding = orbit_embedding(system, np.array([[0.01], [0.99]]), 1)

        sut = conflict_graph(embedding, 0.05)

        self.assertEqual(sut.nnz, 2)

    def test_symbolic_embedding_is_refused(self):
        """
        Verifica se espaços simbólicos não usam o grafo de conflitos.
        """
        with self.assertRaises(ContractViolationError):
            orbit_embedding(full_shift(2), np.zeros((2, 3)), 2)


class TestPlanning(unittest.TestCase):

    def test_planned_resolution_is_fine_enough(self):
        """
        Verifica se a grade planejada respeita ε·L^{-(n-1)} quando cabe no orçamento.
        """
        system = get_system('tripling')

        sut = plan_grid(system, BallSpec(PhasePoint.circle(0.3), 0.1), 4, 0.05)

        self.assertLessEqual(sut.grid.resolution, 0.05 / 27.0 + 1e-15)
        self.assertEqual(sut.warnings, ())

    def test_tight_budget_coarsens_with_a_warning(self):
        """
        Verifica se um orçamento pequeno engrossa a grade e emite aviso.
        """
        system = get_system('tripling')

        sut = plan_grid(system, BallSpec(PhasePoint.circle(0.3), 0.1), 8, 0.05, budget=200)

        self.assertLessEqual(sut.grid.count, 200)
        self.assertTrue(sut.warnings)

    def test_expansion_bound_of_the_three_branch_map(self):
        """
        Verifica se a expansão observada de g não passa da constante de Lipschitz 4.
        """
        sut = expansion_bound(get_system('g3branch'), BallSpec(PhasePoint.circle(0.2), 0.1))

        self.assertIsNotNone(sut)
        self.assertLessEqual(sut, 4.0)
        self.assertGreaterEqual(sut, 2.0)

    def test_expansion_bound_is_undefined_on_the_torus(self):
        """
        Verifica se a expansão local não se aplica ao toro.
        """
        system = get_system('toral:[[2,1],[1,1]]')

        self.assertIsNone(expansion_bound(system, BallSpec(PhasePoint.torus(0.1, 0.1), 0.1)))


if __name__ == '__main__':
    unittest.main()
