"""
Famílias de palavras-código dos deslocamentos codificados.

A k-ésima palavra-código (k ≥ 1) é C_k = 2 0^{g(k)} w_k 0^{g(k)} 2, onde
w_k percorre as palavras binárias não vazias ordenadas por comprimento e,
dentro de cada comprimento, lexicograficamente (0, 1, 00, 01, 10, 11, ...).
A família fatorial g(k) = (10+k)! só admite aritmética de comprimentos;
qualquer cálculo sobre palavras usa uma das famílias de lacuna linear ou
geométrica, ou uma lista explícita de palavras.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from translocal_entropy.utils.errors import BudgetExceededError, ContractViolationError

__status__ = 'Production'

FACTORIAL_OFFSET = 10
WORD_LEVEL_LENGTH_CAP = 100_000


class GapKind(Enum):
    """
    Regras de lacuna disponíveis para as palavras-código.
    """
    FACTORIAL = 'factorial'
    LINEAR = 'linear'
    GEOMETRIC = 'geometric'
    WORDS = 'words'


def binary_word(k: int) -> tuple[int, ...]:
    """
    A k-ésima palavra binária não vazia (k ≥ 1) na ordem comprimento-lexicográfica.
    """
    if k < 1:
        raise ContractViolationError(f' ERRO: Índice de palavra deve ser ≥ 1, recebido {k}.')
    shifted = k + 1
    length = shifted.bit_length() - 1
    rank = shifted - (1 << length)
    return tuple((rank >> (length - 1 - i)) & 1 for i in range(length))


@dataclass(frozen=True)
class CodeWordFamily:
    """
    Uma família (possivelmente infinita) de palavras-código.

    Attributes:
        kind (GapKind): A regra de lacuna.
        parameters (tuple[int, ...]): (a, b) para lacuna linear a·k+b;
            (c,) para lacuna geométrica c·2^k; vazio nos demais casos.
        words (tuple[tuple[int, ...], ...]): As palavras explícitas
            (somente para `GapKind.WORDS`).
    """
    kind: GapKind
    parameters: tuple[int, ...] = ()
    words: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        match self.kind:
            case GapKind.LINEAR:
                if len(self.parameters) != 2 or self.parameters[0] < 1 or self.parameters[1] < 0:
                    raise ContractViolationError(' ERRO: Lacuna linear exige a ≥ 1 e b ≥ 0.')
            case GapKind.GEOMETRIC:
                if len(self.parameters) != 1 or self.parameters[0] < 1:
                    raise ContractViolationError(' ERRO: Lacuna geométrica exige c ≥ 1.')
            case GapKind.WORDS:
                if not self.words or any(len(word) == 0 for word in self.words):
                    raise ContractViolationError(' ERRO: A família explícita exige palavras não vazias.')
                if any(symbol < 0 for word in self.words for symbol in word):
                    raise ContractViolationError(' ERRO: Símbolos devem ser inteiros não negativos.')

    @property
    def is_finite(self) -> bool:
        return self.kind is GapKind.WORDS

    @property
    def is_word_level(self) -> bool:
        """
        Indica se a família admite cálculos sobre as palavras (não só comprimentos).
        """
        return self.kind is not GapKind.FACTORIAL

    @property
    def alphabet_size(self) -> int:
        if self.kind is GapKind.WORDS:
            return max(2, 1 + max(max(word) for word in self.words))
        return 3

    @property
    def identifier(self) -> str:
        match self.kind:
            case GapKind.FACTORIAL:
                return 'factorial'
            case GapKind.LINEAR:
                return 'linear:{},{}'.format(*self.parameters)
            case GapKind.GEOMETRIC:
                return f'geometric:{self.parameters[0]}'
            case GapKind.WORDS:
                return 'words:' + ','.join(''.join(map(str, word)) for word in self.words)

    @property
    def size(self) -> int | None:
        """
        Número de palavras-código (None para famílias infinitas).
        """
        return len(self.words) if self.is_finite else None

    def gap(self, k: int) -> int:
        """
        O comprimento g(k) dos blocos de zeros da k-ésima palavra-código.
        """
        match self.kind:
            case GapKind.FACTORIAL:
                return math.factorial(FACTORIAL_OFFSET + k)
            case GapKind.LINEAR:
                a, b = self.parameters
                return a * k + b
            case GapKind.GEOMETRIC:
                return self.parameters[0] * 2 ** k
        raise ContractViolationError(' ERRO: A família explícita não possui regra de lacuna.')

    def code_length(self, k: int) -> int:
        """
        O comprimento |C_k| (aritmética exata, inclusive na família fatorial).
        """
        if self.kind is GapKind.WORDS:
            return len(self.words[k - 1])
        return 2 * self.gap(k) + (k + 1).bit_length() + 1

    def code_word(self, k: int) -> tuple[int, ...]:
        """
        A k-ésima palavra-código como tupla de símbolos.

        Raises:
            BudgetExceededError: Se a palavra for longa demais para ser materializada.
        """
        if self.kind is GapKind.WORDS:
            return self.words[k - 1]
        length = self.code_length(k)
        if length > WORD_LEVEL_LENGTH_CAP:
            raise BudgetExceededError(WORD_LEVEL_LENGTH_CAP)
        zeros = (0,) * self.gap(k)
        return (2, *zeros, *binary_word(k), *zeros, 2)

    def lengths(self) -> Iterator[int]:
        """
        Gera |C_1|, |C_2|, ... (finita para famílias explícitas).
        """
        if self.is_finite:
            yield from (len(word) for word in self.words)
            return
        k = 1
        while True:
            yield self.code_length(k)
            k += 1

    def active_words(self, horizon: int) -> tuple[tuple[int, ...], ...]:
        """
        As palavras-código de comprimento ≤ `horizon` (sempre ao menos a primeira).

        Famílias explícitas devolvem todas as palavras. As infinitas são
        truncadas no horizonte, o que gera um subdeslocamento cuja entropia
        converge para a da família completa quando o horizonte cresce.
        """
        if self.is_finite:
            return self.words
        if not self.is_word_level:
            raise ContractViolationError(
                ' ERRO: A família fatorial só admite aritmética de comprimentos; use a lacuna linear.'
            )
        active = [self.code_word(1)]
        k = 2
        while self.code_length(k) <= horizon:
            active.append(self.code_word(k))
            k += 1
        return tuple(active)


def parse_family(text: str) -> CodeWordFamily:
    """
    Interpreta identificadores como `linear:1,0`, `geometric:1`, `factorial`
    ou `words:0,01`.

    Raises:
        ContractViolationError: Se o identificador for malformado.
    """
    head, _, tail = text.strip().partition(':')
    try:
        match head:
            case 'factorial':
                return CodeWordFamily(GapKind.FACTORIAL)
            case 'linear':
                a, b = (int(part) for part in tail.split(','))
                return CodeWordFamily(GapKind.LINEAR, (a, b))
            case 'geometric':
                return CodeWordFamily(GapKind.GEOMETRIC, (int(tail),))
            case 'words':
                words = tuple(tuple(int(ch) for ch in part.strip()) for part in tail.split(','))
                return CodeWordFamily(GapKind.WORDS, words=words)
    except ValueError as error:
        if isinstance(error, ContractViolationError):
            raise
        raise ContractViolationError(f' ERRO: Família de palavras-código inválida: "{text}".') from error
    raise ContractViolationError(f' ERRO: Família de palavras-código desconhecida: "{text}".')
