"""
Contagem exata da linguagem de deslocamentos codificados.

A linguagem é o conjunto de subpalavras de concatenações livres das
palavras-código. O reconhecedor é um autômato não determinístico "em flor":
um estado por posição de cada palavra-código, e o fim de uma palavra leva ao
início de qualquer outra. Começando de todos os estados ao mesmo tempo
(subpalavras podem começar no meio de uma palavra-código), a construção de
subconjuntos torna a contagem exata: cada palavra leva a exatamente um
subconjunto, e basta acumular quantas palavras chegam a cada um.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from translocal_entropy.symbolic.families import CodeWordFamily
from translocal_entropy.utils.errors import BudgetExceededError, ContractViolationError, HorizonExceededError
from translocal_entropy.utils.settings import current_settings

__status__ = 'Production'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FlowerAutomaton:
    """
    Autômato de posições das palavras-código, com estados codificados em bits.

    Attributes:
        symbol_masks (dict[int, int]): Para cada símbolo, os estados que o leem.
        successors (tuple[int, ...]): Para cada estado, a máscara dos
            estados seguintes depois de ler o seu símbolo.
        full_mask (int): Todos os estados.
    """
    symbol_masks: dict[int, int]
    successors: tuple[int, ...]
    full_mask: int

    @classmethod
    def from_words(cls, words: Sequence[Sequence[int]]) -> FlowerAutomaton:
        starts = []
        position = 0
        for word in words:
            starts.append(position)
            position += len(word)
        hub = 0
        for start in starts:
            hub |= 1 << start
        symbol_masks: dict[int, int] = defaultdict(int)
        successors = []
        for start, word in zip(starts, words):
            for offset, symbol in enumerate(word):
                state = start + offset
                symbol_masks[symbol] |= 1 << state
                successors.append(hub if offset == len(word) - 1 else 1 << (state + 1))
        return cls(dict(symbol_masks), tuple(successors), (1 << position) - 1)

    @property
    def alphabet(self) -> tuple[int, ...]:
        return tuple(sorted(self.symbol_masks))

    def step(self, mask: int, symbol: int) -> int:
        """
        Os estados alcançados a partir de `mask` lendo `symbol`.
        """
        reading = mask & self.symbol_masks.get(symbol, 0)
        result = 0
        while reading:
            lowest = reading & -reading
            result |= self.successors[lowest.bit_length() - 1]
            reading ^= lowest
        return result

    def read(self, word: Sequence[int], mask: int | None = None) -> int:
        current = self.full_mask if mask is None else mask
        for symbol in word:
            current = self.step(current, symbol)
            if not current:
                break
        return current


def _automaton(family: CodeWordFamily, horizon: int) -> FlowerAutomaton:
    return FlowerAutomaton.from_words(family.active_words(horizon))


def coded_language_count(family: CodeWordFamily, length: int, prefix: Sequence[int] = ()) -> int:
    """
    Número de palavras admissíveis de comprimento `length`, opcionalmente
    restritas às que começam por `prefix`.

    Args:
        family (CodeWordFamily): A família de palavras-código.
        length (int): O comprimento das palavras (≥ 0).
        prefix (Sequence[int], optional): Prefixo obrigatório. Defaults to ().

    Raises:
        ContractViolationError: Se `length` for negativo.
        HorizonExceededError: Se `length` exceder o horizonte configurado.
        BudgetExceededError: Se a tabela de subconjuntos exceder o orçamento.

    Returns:
        int: A contagem exata.
    """
    if length < 0:
        raise ContractViolationError(f' ERRO: Comprimento negativo: {length}.')
    settings = current_settings()
    if length > settings.horizon_cap:
        raise HorizonExceededError(settings.horizon_cap)
    if length == 0:
        return 1
    automaton = _automaton(family, max(length, len(prefix)))
    fixed = tuple(prefix[:length])
    start = automaton.read(fixed)
    if not start:
        return 0
    counts: dict[int, int] = {start: 1}
    for _ in range(length - len(fixed)):
        following: dict[int, int] = defaultdict(int)
        for mask, count in counts.items():
            for symbol in automaton.alphabet:
                image = automaton.step(mask, symbol)
                if image:
                    following[image] += count
        if len(following) > settings.point_budget:
            raise BudgetExceededError(settings.point_budget)
        counts = following
    total = sum(counts.values())
    logger.debug('Linguagem %s: %d palavras de comprimento %d.', family.identifier, total, length)
    return total


def is_admissible(family: CodeWordFamily, word: Sequence[int]) -> bool:
    """
    Indica se `word` é subpalavra de alguma concatenação livre de palavras-código.
    """
    if not word:
        return True
    automaton = _automaton(family, len(word))
    return automaton.read(word) != 0


def admissible_words(family: CodeWordFamily, length: int, prefix: Sequence[int] = ()) -> list[tuple[int, ...]]:
    """
    As palavras admissíveis de comprimento `length` que começam por `prefix`,
    em ordem lexicográfica.

    Raises:
        ContractViolationError: Se `length` for negativo.
        BudgetExceededError: Se a lista exceder o orçamento de pontos.
    """
    if length < 0:
        raise ContractViolationError(f' ERRO: Comprimento negativo: {length}.')
    fixed = tuple(prefix[:length])
    automaton = _automaton(family, max(length, 1))
    start = automaton.read(fixed)
    if not start:
        return []
    budget = current_settings().point_budget
    layer = [(fixed, start)]
    for _ in range(length - len(fixed)):
        layer = [
            (word + (symbol,), image)
            for word, mask in layer
            for symbol in automaton.alphabet
            if (image := automaton.step(mask, symbol))
        ]
        if len(layer) > budget:
            raise BudgetExceededError(budget)
    return [word for word, _ in layer]
