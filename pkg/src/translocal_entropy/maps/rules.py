"""
Regras de evolução (estratégias) dos sistemas do catálogo.

Cada regra implementa o contrato `MapRule`, uma classe base abstrata que
garante que todo mapa saiba avaliar-se sobre um lote vetorizado de estados e
declarar uma constante de Lipschitz. Regras com dados de suavidade também
fornecem a derivada e a máscara de pontos singulares (extremos de ramos onde
as derivadas laterais diferem).
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable

import numpy as np

from translocal_entropy.utils.constants import (
    DEFAULT_STAIRCASE_LEVELS,
    SINGULAR_SLOPE_TOLERANCE,
    TWO_PI,
)
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

ArrayFunction = Callable[[np.ndarray], np.ndarray]


class MapRule(ABC):
    """
    Define o contrato de todas as regras de evolução.
    """

    @abstractmethod
    def apply(self, states: np.ndarray) -> np.ndarray:
        """
        Avalia o mapa sobre um lote de estados de forma (N, k).

        Args:
            states (np.ndarray): Os estados na representação vetorizada.

        Returns:
            np.ndarray: As imagens, reduzidas ao espaço de fase.
        """

    @property
    @abstractmethod
    def lipschitz(self) -> float:
        """
        Uma constante de Lipschitz (expansão máxima) do mapa.
        """

    @property
    def has_derivative(self) -> bool:
        return False

    def derivative(self, states: np.ndarray) -> np.ndarray:
        """
        Derivada f'(x) em cada estado (somente regras unidimensionais).
        """
        raise ContractViolationError(f' ERRO: {type(self).__name__} não possui regra de derivada.')

    def singular_mask(self, states: np.ndarray) -> np.ndarray:
        """
        Indica os estados que são pontos de não diferenciabilidade.
        """
        return np.zeros(states.shape[0], dtype=bool)


@dataclass(frozen=True)
class Branch:
    """
    Um ramo de um mapa definido por partes no intervalo [left, right).

    Attributes:
        left (float): Extremo esquerdo (pertence ao ramo).
        right (float): Extremo direito.
        formula (ArrayFunction): A expressão do ramo.
        slope (ArrayFunction): A derivada do ramo.
        linear (tuple[float, float] | None): (inclinação, intercepto) quando afim.
    """
    left: float
    right: float
    formula: ArrayFunction
    slope: ArrayFunction
    linear: tuple[float, float] | None = None


def affine_branch(left: float, right: float, slope: float, intercept: float) -> Branch:
    """
    Atalho para um ramo afim x ↦ slope·x + intercept.
    """
    return Branch(
        left=left,
        right=right,
        formula=lambda x: slope * x + intercept,
        slope=lambda x: np.full_like(x, slope, dtype=float),
        linear=(slope, intercept),
    )


class PiecewiseRule(MapRule):
    """
    Mapa unidimensional definido por ramos semiabertos à direita.

    Os extremos dos ramos pertencem ao ramo fechado à esquerda. Em regras
    periódicas (círculo) o resultado é reduzido módulo 1; nas demais
    (intervalo) o último ramo inclui o extremo direito 1.
    """

    def __init__(self, branches: list[Branch], periodic: bool, lipschitz: float) -> None:
        if not branches:
            raise ContractViolationError(' ERRO: Regra sem ramos.')
        for current, following in zip(branches, branches[1:]):
            if not math.isclose(current.right, following.left):
                raise ContractViolationError(' ERRO: Os ramos não particionam o domínio.')
        if not (math.isclose(branches[0].left, 0.0) and math.isclose(branches[-1].right, 1.0)):
            raise ContractViolationError(' ERRO: Os ramos devem cobrir [0, 1].')
        self._branches = tuple(branches)
        self._lefts = np.array([b.left for b in branches])
        self._periodic = periodic
        self._lipschitz = float(lipschitz)
        self._singular_points = self._find_singular_points()

    @property
    def branches(self) -> tuple[Branch, ...]:
        return self._branches

    @property
    def periodic(self) -> bool:
        return self._periodic

    @property
    def lipschitz(self) -> float:
        return self._lipschitz

    @property
    def has_derivative(self) -> bool:
        return True

    @property
    def singular_points(self) -> tuple[float, ...]:
        return self._singular_points

    def branch_index(self, states: np.ndarray) -> np.ndarray:
        """
        Índice do ramo que contém cada estado.
        """
        x = states[:, 0]
        index = np.searchsorted(self._lefts, x, side='right') - 1
        return np.clip(index, 0, len(self._branches) - 1)

    def apply(self, states: np.ndarray) -> np.ndarray:
        x = states[:, 0]
        index = self.branch_index(states)
        image = np.empty_like(x, dtype=float)
        for number, branch in enumerate(self._branches):
            mask = index == number
            if mask.any():
                image[mask] = branch.formula(x[mask])
        if self._periodic:
            image = image % 1.0
            image[image >= 1.0] = 0.0
        else:
            image = np.clip(image, 0.0, 1.0)
        return image[:, None]

    def derivative(self, states: np.ndarray) -> np.ndarray:
        x = states[:, 0]
        index = self.branch_index(states)
        slopes = np.empty_like(x, dtype=float)
        for number, branch in enumerate(self._branches):
            mask = index == number
            if mask.any():
                slopes[mask] = branch.slope(x[mask])
        return slopes

    def singular_mask(self, states: np.ndarray) -> np.ndarray:
        x = states[:, 0]
        mask = np.zeros(x.shape[0], dtype=bool)
        for point in self._singular_points:
            gap = np.abs(x - point)
            if self._periodic:
                gap = np.minimum(gap, 1.0 - gap)
            mask |= gap <= SINGULAR_SLOPE_TOLERANCE
        return mask

    def linear_branches(self) -> list[tuple[float, float, float, float]] | None:
        """
        Lista (left, right, inclinação, intercepto) quando todos os ramos são afins.
        """
        if any(b.linear is None for b in self._branches):
            return None
        return [(b.left, b.right, *b.linear) for b in self._branches]

    def _one_sided_slope(self, branch: Branch, x: float) -> float:
        with np.errstate(divide='ignore', invalid='ignore'):
            return float(branch.slope(np.array([x]))[0])

    def _find_singular_points(self) -> tuple[float, ...]:
        singular = []
        for left_branch, right_branch in zip(self._branches, self._branches[1:]):
            point = right_branch.left
            if not self._slopes_match(
                self._one_sided_slope(left_branch, point), self._one_sided_slope(right_branch, point)
            ):
                singular.append(point)
        first, last = self._branches[0], self._branches[-1]
        start_slope = self._one_sided_slope(first, 0.0)
        end_slope = self._one_sided_slope(last, 1.0)
        if self._periodic:
            if not self._slopes_match(end_slope, start_slope):
                singular.append(0.0)
        else:
            if not self._is_regular(start_slope):
                singular.append(0.0)
            if not self._is_regular(end_slope):
                singular.append(1.0)
        return tuple(sorted(singular))

    @staticmethod
    def _is_regular(slope: float) -> bool:
        return math.isfinite(slope) and slope != 0.0

    @classmethod
    def _slopes_match(cls, left: float, right: float) -> bool:
        if not (cls._is_regular(left) and cls._is_regular(right)):
            return False
        return math.isclose(left, right, rel_tol=SINGULAR_SLOPE_TOLERANCE)


class StaircaseRule(MapRule):
    """
    Mapa de entropia infinita com níveis I_m = (2^{-m}, 2^{1-m}].

    Em cada nível (m ≤ `levels`) o mapa é um zigue-zague linear por partes
    com 2m+1 laps de inclinação ±(2m+1), cada um sobrejetor sobre I_m; os
    extremos dos níveis são fixos. Abaixo de 2^{-levels} (e em 0) o mapa é a
    identidade, truncamento da cascata infinita.
    """

    def __init__(self, levels: int = DEFAULT_STAIRCASE_LEVELS) -> None:
        if levels < 1:
            raise ContractViolationError(' ERRO: A escada exige ao menos um nível.')
        self._levels = levels

    @property
    def levels(self) -> int:
        return self._levels

    @property
    def lipschitz(self) -> float:
        return float(2 * self._levels + 1)

    @property
    def has_derivative(self) -> bool:
        return True

    def level_of(self, x: np.ndarray) -> np.ndarray:
        """
        O nível m com x ∈ (2^{-m}, 2^{1-m}] (0 para pontos abaixo do corte).
        """
        mantissa, exponent = np.frexp(x)
        level = np.where(mantissa == 0.5, 2 - exponent, 1 - exponent)
        level = np.where((x <= 0.0) | (level > self._levels), 0, level)
        return level.astype(int)

    def _lap_coordinates(self, x: np.ndarray) -> tuple[np.ndarray, ...]:
        level = self.level_of(x)
        active = level > 0
        safe_level = np.where(active, level, 1)
        base = np.ldexp(1.0, -safe_level)
        laps = 2 * safe_level + 1
        t = np.clip((x - base) / base, 0.0, 1.0) * laps
        lap = np.minimum(np.floor(t), laps - 1)
        return level, active, base, laps, t, lap

    def apply(self, states: np.ndarray) -> np.ndarray:
        x = states[:, 0]
        _, active, base, _, t, lap = self._lap_coordinates(x)
        local = t - lap
        rising = (lap % 2) == 0
        image = base + base * np.where(rising, local, 1.0 - local)
        return np.where(active, image, x)[:, None]

    def derivative(self, states: np.ndarray) -> np.ndarray:
        x = states[:, 0]
        _, active, _, laps, _, lap = self._lap_coordinates(x)
        slopes = np.where((lap % 2) == 0, laps, -laps).astype(float)
        return np.where(active, slopes, 1.0)

    def singular_mask(self, states: np.ndarray) -> np.ndarray:
        x = states[:, 0]
        _, active, _, laps, t, _ = self._lap_coordinates(x)
        interior = (t > SINGULAR_SLOPE_TOLERANCE) & (t < laps - SINGULAR_SLOPE_TOLERANCE)
        near_corner = np.abs(t - np.round(t)) <= SINGULAR_SLOPE_TOLERANCE
        return active & interior & near_corner

    def laps(self, level: int) -> list[tuple[float, float, float]]:
        """
        Os laps (left, right, inclinação) do nível `level`.
        """
        if not 1 <= level <= self._levels:
            raise ContractViolationError(f' ERRO: Nível {level} fora de [1, {self._levels}].')
        base = 2.0 ** (-level)
        count = 2 * level + 1
        width = base / count
        return [
            (base + i * width, base + (i + 1) * width, float(count if i % 2 == 0 else -count))
            for i in range(count)
        ]


class DiskRule(MapRule):
    """
    Mapa do disco em coordenadas polares: (r, φ) ↦ (r(2−r), kφ mod 2π).

    Com `radial=False` o raio fica fixo (apenas o ângulo é multiplicado).
    """

    def __init__(self, angle_factor: int = 3, radial: bool = True) -> None:
        self._angle_factor = angle_factor
        self._radial = radial

    @property
    def lipschitz(self) -> float:
        return float(max(self._angle_factor, 2 if self._radial else 1))

    def apply(self, states: np.ndarray) -> np.ndarray:
        radius, angle = states[:, 0], states[:, 1]
        new_radius = radius * (2.0 - radius) if self._radial else radius
        new_angle = (self._angle_factor * angle) % TWO_PI
        return np.stack((np.clip(new_radius, 0.0, 1.0), new_angle), axis=-1)


class ToralRule(MapRule):
    """
    Automorfismo do toro x ↦ A·x mod 1 para uma matriz inteira quadrada A.
    """

    def __init__(self, matrix: np.ndarray) -> None:
        array = np.asarray(matrix, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ContractViolationError(' ERRO: A matriz do automorfismo deve ser quadrada.')
        if not np.allclose(array, np.round(array)):
            raise ContractViolationError(' ERRO: A matriz do automorfismo deve ter entradas inteiras.')
        self._matrix = np.round(array)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix.copy()

    @property
    def lipschitz(self) -> float:
        return float(np.max(np.sum(np.abs(self._matrix), axis=1)))

    def apply(self, states: np.ndarray) -> np.ndarray:
        image = (states @ self._matrix.T) % 1.0
        image[image >= 1.0] = 0.0
        return image


class ShiftRule(MapRule):
    """
    Deslocamento à esquerda sobre lotes de palavras finitas.

    A última coluna é completada com o símbolo 0 (o lote representa apenas
    um horizonte finito de cada sequência).
    """

    def __init__(self, beta: float) -> None:
        self._beta = beta

    @property
    def lipschitz(self) -> float:
        return self._beta

    def apply(self, states: np.ndarray) -> np.ndarray:
        shifted = np.zeros_like(states)
        shifted[:, :-1] = states[:, 1:]
        return shifted


class ProductRule(MapRule):
    """
    Produto cartesiano de regras unidimensionais periódicas (sobre T^d).
    """

    def __init__(self, factors: list[MapRule]) -> None:
        if not factors:
            raise ContractViolationError(' ERRO: Produto sem fatores.')
        self._factors = tuple(factors)

    @property
    def factors(self) -> tuple[MapRule, ...]:
        return self._factors

    @property
    def lipschitz(self) -> float:
        return max(f.lipschitz for f in self._factors)

    def apply(self, states: np.ndarray) -> np.ndarray:
        columns = [f.apply(states[:, i:i + 1]) for i, f in enumerate(self._factors)]
        return np.concatenate(columns, axis=1)


class IterateRule(MapRule):
    """
    O iterado f^R de uma regra, com derivada pela regra da cadeia.
    """

    def __init__(self, base: MapRule, power: int) -> None:
        if power < 1:
            raise ContractViolationError(' ERRO: A potência do iterado deve ser ≥ 1.')
        self._base = base
        self._power = power

    @property
    def base(self) -> MapRule:
        return self._base

    @property
    def power(self) -> int:
        return self._power

    @property
    def lipschitz(self) -> float:
        return self._base.lipschitz ** self._power

    @property
    def has_derivative(self) -> bool:
        return self._base.has_derivative

    def apply(self, states: np.ndarray) -> np.ndarray:
        for _ in range(self._power):
            states = self._base.apply(states)
        return states

    def derivative(self, states: np.ndarray) -> np.ndarray:
        total = np.ones(states.shape[0])
        for _ in range(self._power):
            total = total * self._base.derivative(states)
            states = self._base.apply(states)
        return total

    def singular_mask(self, states: np.ndarray) -> np.ndarray:
        mask = np.zeros(states.shape[0], dtype=bool)
        for _ in range(self._power):
            mask |= self._base.singular_mask(states)
            states = self._base.apply(states)
        return mask
