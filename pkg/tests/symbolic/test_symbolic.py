"""
Verificação das famílias de palavras-código, da linguagem codificada, da
equação de Kraft e das sequências u, v, w.
"""
from __future__ import annotations

import math
import unittest

import numpy as np

from translocal_entropy.symbolic.families import CodeWordFamily, GapKind, binary_word, parse_family
from translocal_entropy.symbolic.kraft import kraft_entropy
from translocal_entropy.symbolic.language import (
    FlowerAutomaton,
    admissible_words,
    coded_language_count,
    is_admissible,
)
from translocal_entropy.symbolic.sequences import make_uvw
from translocal_entropy.utils.errors import ContractViolationError, NoPositiveRootError

__status__ = 'Verification'

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0


class TestFamilies(unittest.TestCase):

    def test_binary_words_in_length_lexicographic_order(self):
        """
        Verifica a ordem 0, 1, 00, 01, 10, 11.
        """
        sut = [binary_word(k) for k in range(1, 7)]

        self.assertEqual(sut, [(0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)])

    def test_linear_code_words(self):
        """
        Verifica C_k = 2 0^{g(k)} w_k 0^{g(k)} 2 com g(k) = k.
        """
        sut = parse_family('linear:1,0')

        self.assertEqual(sut.code_word(1), (2, 0, 0, 0, 2))
        self.assertEqual(sut.code_word(2), (2, 0, 0, 1, 0, 0, 2))
        self.assertEqual([sut.code_length(k) for k in (1, 2, 3, 4)], [5, 7, 9, 12])
        self.assertEqual(sut.identifier, 'linear:1,0')

    def test_factorial_family_only_supports_lengths(self):
        """
        Verifica se a família fatorial calcula comprimentos exatos e recusa palavras.
        """
        sut = parse_family('factorial')

        self.assertEqual(sut.code_length(1), 2 * math.factorial(11) + 3)
        self.assertFalse(sut.is_word_level)
        with self.assertRaises(ContractViolationError):
            sut.active_words(50)

    def test_active_words_are_truncated_at_the_horizon(self):
        """
        Verifica se só as palavras de comprimento ≤ horizonte ficam ativas.
        """
        sut = parse_family('linear:1,0').active_words(8)

        self.assertEqual(len(sut), 2)

    def test_explicit_words(self):
        """
        Verifica a família explícita {0, 01}.
        """
        sut = parse_family('words:0,01')

        self.assertIs(sut.kind, GapKind.WORDS)
        self.assertEqual(sut.words, ((0,), (0, 1)))
        self.assertEqual(sut.size, 2)
        self.assertEqual(sut.alphabet_size, 2)

    def test_malformed_families_are_rejected(self):
        """
        Verifica se famílias malformadas levantam ContractViolationError.
        """
        for text in ('linear:0,1', 'linear:x', 'geometric:0', 'words:', 'bogus'):
            with self.subTest(text=text):
                with self.assertRaises(ContractViolationError):
                    parse_family(text)


class TestLanguage(unittest.TestCase):

    def test_words_without_two_consecutive_ones(self):
        """
        Verifica se {0, 01} gera 5 palavras de comprimento 3 (sem "11").
        """
        family = parse_family('words:0,01')

        self.assertEqual(coded_language_count(family, 3), 5)
        self.assertEqual(coded_language_count(family, 2), 3)
        self.assertEqual(coded_language_count(family, 0), 1)

    def test_prefix_restricts_the_count(self):
        """
        Verifica a contagem das palavras de comprimento 3 que começam por 1.
        """
        family = parse_family('words:0,01')

        self.assertEqual(coded_language_count(family, 3, prefix=(1,)), 2)
        self.assertEqual(coded_language_count(family, 3, prefix=(1, 1)), 0)

    def test_admissibility(self):
        """
        Verifica o reconhecimento de subpalavras.
        """
        family = parse_family('words:0,01')

        self.assertTrue(is_admissible(family, (1, 0, 1)))
        self.assertFalse(is_admissible(family, (1, 1)))
        self.assertTrue(is_admissible(family, ()))

    def test_double_delimiter_is_synchronizing(self):
        """
        Verifica, até comprimento 15, que u22 e 22v admissíveis implicam u22v admissível.
        """
        family = parse_family('linear:1,0')
        checked = 0

        for n in range(2, 16):
            for left_length in range(n - 1):
                right_length = n - 2 - left_length
                lefts = [w[:left_length] for w in admissible_words(family, left_length + 2) if w[-2:] == (2, 2)]
                rights = [w[2:] for w in admissible_words(family, right_length + 2, prefix=(2, 2))]
                for u in lefts:
                    for v in rights:
                        with self.subTest(word=u + (2, 2) + v):
                            self.assertTrue(is_admissible(family, u + (2, 2) + v))
                        checked += 1

        self.assertGreater(checked, 0)

    def test_language_growth_matches_the_kraft_root(self):
        """
        Verifica se a taxa de crescimento da linguagem da lacuna linear converge para a raiz de Kraft.
        """
        family = parse_family('linear:1,0')
        counts = {n: coded_language_count(family, n) for n in (40, 60, 80)}

        slope = math.log(counts[80] / counts[40]) / 40

        self.assertLess(counts[40], counts[60])
        self.assertLess(counts[60], counts[80])
        self.assertAlmostEqual(slope, kraft_entropy(family).h, delta=0.03)

    def test_admissible_words_agree_with_the_count(self):
        """
        Verifica se a enumeração das palavras admissíveis bate com a contagem e respeita o prefixo.
        """
        family = parse_family('linear:1,0')

        for length, prefix in ((6, ()), (9, (2,)), (9, (0, 0)), (4, (1, 1))):
            with self.subTest(length=length, prefix=prefix):
                sut = admissible_words(family, length, prefix)
                self.assertEqual(len(sut), coded_language_count(family, length, prefix))
                self.assertEqual(sut, sorted(sut))
                self.assertTrue(all(word[:len(prefix)] == prefix for word in sut))

    def test_automaton_alphabet(self):
        """
        Verifica o alfabeto do autômato em flor.
        """
        sut = FlowerAutomaton.from_words([(0,), (0, 1)])

        self.assertEqual(sut.alphabet, (0, 1))
        self.assertEqual(sut.full_mask, 0b111)

    def test_negative_length_is_rejected(self):
        """
        Verifica se comprimentos negativos são recusados.
        """
        with self.assertRaises(ContractViolationError):
            coded_language_count(parse_family('words:0,01'), -1)


class TestKraft(unittest.TestCase):

    def test_lengths_one_and_two_give_the_golden_ratio(self):
        """
        Verifica se e^{-h} + e^{-2h} = 1 tem raiz log φ.
        """
        sut = kraft_entropy([1, 2])

        self.assertAlmostEqual(sut.h, math.log(GOLDEN_RATIO), places=9)
        self.assertEqual(sut.truncation_index, 2)
        self.assertEqual(sut.truncation_error, 0.0)

    def test_equal_lengths(self):
        """
        Verifica se k palavras de comprimento L dão log k / L.
        """
        self.assertAlmostEqual(kraft_entropy([3, 3, 3]).h, math.log(3.0) / 3.0, places=9)

    def test_infinite_family_is_truncated(self):
        """
        Verifica se a família linear produz raiz positiva com resíduo pequeno.
        """
        sut = kraft_entropy(CodeWordFamily(GapKind.LINEAR, (1, 0)))

        self.assertGreater(sut.h, 0.0)
        self.assertLess(sut.residual, 1e-6)

    def test_root_is_monotone_in_the_length_multiset(self):
        """
        Verifica, em 100 multiconjuntos aleatórios, que acrescentar uma palavra aumenta h e alongar uma o reduz.
        """
        rng = np.random.default_rng(5)

        for _ in range(100):
            lengths = rng.integers(1, 8, size=int(rng.integers(2, 7))).tolist()
            with self.subTest(lengths=lengths):
                base = kraft_entropy(lengths).h
                extra = kraft_entropy(lengths + [int(rng.integers(1, 8))]).h
                longer = kraft_entropy([lengths[0] + 1] + lengths[1:]).h
                self.assertGreater(extra, base)
                self.assertLess(longer, base)

    def test_single_word_has_no_positive_root(self):
        """
        Verifica se uma única palavra não admite raiz positiva.
        """
        with self.assertRaises(NoPositiveRootError):
            kraft_entropy([2])

    def test_invalid_lengths_are_rejected(self):
        """
        Verifica se listas vazias ou comprimentos nulos são recusados.
        """
        for lengths in ([], [0, 1]):
            with self.subTest(lengths=lengths):
                with self.assertRaises(ContractViolationError):
                    kraft_entropy(lengths)


class TestSequences(unittest.TestCase):

    def test_prefixes_of_u_v_w(self):
        """
        Verifica os primeiros símbolos de u, v e w (índice 0 no primeiro símbolo).
        """
        u, v, w = make_uvw(6)

        self.assertEqual(u.symbols, (1, 1, 1, 0, 1, 1))
        self.assertEqual(v.symbols, (1, 0, 1, 1, 1, 1))
        self.assertEqual(w.symbols, (0,) * 6)

    def test_two_sided_pasts(self):
        """
        Verifica os passados 1^∞ em u e v e 0^∞ em w.
        """
        u, v, w = make_uvw(4, two_sided=True)

        self.assertEqual(u.past, (1, 1, 1, 1))
        self.assertEqual(v.past, (1, 1, 1, 1))
        self.assertEqual(w.past, (0, 0, 0, 0))

    def test_blocks_follow_factorial_lengths(self):
        """
        Verifica se o bloco j = 4 de v é formado por 18 zeros.
        """
        _, v, _ = make_uvw(24)

        self.assertEqual(v.symbols[6:24], (0,) * 18)

    def test_invalid_horizon_is_rejected(self):
        """
        Verifica se horizonte nulo é recusado.
        """
        with self.assertRaises(ContractViolationError):
            make_uvw(0)


if __name__ == '__main__':
    unittest.main()
