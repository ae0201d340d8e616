"""
Pesos de coberturas M_Z(s, r, φ, N) e a variante translocal M_{Z,ω}(s, φ, N).

O ínfimo sobre todas as coberturas é substituído pelo mínimo sobre três
famílias estruturadas, construídas sobre uma amostra fixa de Z:

- `uniform`: em cada nível n, os centros de um conjunto separado guloso
  maximal, cujas bolas cobrem toda a amostra;
- `refined`: começando num nível n, cada bola é trocada pela soma das
  refinadas do nível seguinte que cobrem as suas amostras, quando isso
  diminui o peso;
- `vitali`: a subfamília de bolas disjuntas (conflito a 2r) do nível n,
  completada pelos donos das amostras que ficaram descobertas.

O peso em N é o mínimo sobre os níveis n ∈ [N, max_level] e as três
famílias, de modo que, com `max_level` fixo, é não decrescente em N.
Os níveis não dependem de s: são calculados uma vez e reutilizados.
"""
from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.spatial import cKDTree

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.potentials import PotentialSpec, birkhoff_sums
from translocal_entropy.pressure.regions import RegionSpec, RegionSurrogate, bowen_surrogate, metric_surrogate
from translocal_entropy.separated.greedy import (
    OrbitEmbedding,
    conflict_graph,
    greedy_independent_set,
    orbit_embedding,
)
from translocal_entropy.utils.constants import DEFAULT_COVER_DEPTH
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)

UNIFORM = 'uniform'
REFINED = 'refined'
VITALI = 'vitali'
COVER_FAMILIES = (UNIFORM, REFINED, VITALI)


@dataclass(frozen=True, eq=False)
class CoverWeight:
    """
    Peso de uma cobertura e a sua descrição.

    Attributes:
        value (float): Σ_j exp(−s·n_j + S_{n_j}φ(x_j)), com repetições.
        s (float): O parâmetro s.
        radius (float | None): O raio r das bolas de Bowen (None na translocal).
        omega (float | None): A taxa ω (None na versão de Bowen).
        n_min (int): O N da cobertura (todo n_j ≥ N).
        potential (str): Identificador do potencial.
        family (str): `uniform`, `refined` ou `vitali`.
        centers (np.ndarray): Centros x_j, forma (M, k).
        levels (np.ndarray): Os n_j.
        radii (np.ndarray): Raio de cada elemento.
        multiplicity (np.ndarray): Quantas vezes cada elemento entra na soma.
        warnings (tuple[str, ...]): Avisos da amostra.
    """
    value: float
    s: float
    radius: float | None
    omega: float | None
    n_min: int
    potential: str
    family: str
    centers: np.ndarray
    levels: np.ndarray
    radii: np.ndarray
    multiplicity: np.ndarray
    warnings: tuple[str, ...] = ()

    @property
    def log_value(self) -> float:
        return math.log(self.value) if self.value > 0.0 else -math.inf

    @property
    def size(self) -> int:
        return int(self.levels.shape[0])


@dataclass(frozen=True, eq=False)
class _Level:
    n: int
    radius: float
    embedding: OrbitEmbedding
    centers: np.ndarray
    owner: np.ndarray
    pruned: np.ndarray


def _reach(radius: float) -> float:
    return radius * (1.0 + 1e-12)


def _covered(embedding: OrbitEmbedding, centers: np.ndarray, samples: np.ndarray, radius: float) -> np.ndarray:
    """
    Indica, para cada amostra, se alguma bola dos centros a contém.
    """
    result = np.zeros(samples.shape[0], dtype=bool)
    if not centers.size or not samples.size:
        return result
    tree = cKDTree(embedding.vectors[centers], boxsize=1.0 if embedding.periodic else None)
    candidates = tree.query_ball_point(embedding.vectors[samples], _reach(radius), p=np.inf)
    for row, found in enumerate(candidates):
        if not found:
            continue
        if not embedding.euclidean:
            result[row] = True
            continue
        found = np.asarray(found)
        gaps = embedding.step_distances(np.full(found.shape, samples[row]), centers[found])
        result[row] = bool(np.any(gaps <= _reach(radius)))
    return result


def _vitali_prune(embedding: OrbitEmbedding, centers: np.ndarray, owner: np.ndarray, radius: float) -> np.ndarray:
    subset = OrbitEmbedding(embedding.vectors[centers], embedding.steps, embedding.periodic, embedding.euclidean)
    kept, _ = greedy_independent_set(conflict_graph(subset, 2.0 * radius))
    kept = centers[kept]
    orphans = np.flatnonzero(~np.isin(owner, kept))
    uncovered = orphans[~_covered(embedding, kept, orphans, radius)]
    return np.union1d(kept, np.unique(owner[uncovered]))


class CoverBuilder:
    """
    Níveis de cobertura de uma região, reutilizáveis para qualquer s.

    Cada nível n guarda os centros gulosos, o dono de cada amostra e a
    subfamília de Vitali. Os níveis são construídos sob demanda e
    guardados num cache protegido por `threading.RLock`.

    Args:
        system (SystemDescriptor): O sistema.
        region (RegionSpec): O conjunto Z.
        potential (PotentialSpec): O potencial φ.
        max_level (int): O maior n_j admitido.
        radius (float | None): O raio r das bolas de Bowen.
        omega (float | None): A taxa ω das bolas métricas e^{-ωn}.
        budget (int | None): Limite de pontos da amostra.

    Raises:
        ContractViolationError: Se exatamente um de `radius` e `omega` não
            for dado, ou se os parâmetros forem inválidos.
        BudgetExceededError: Se a amostra exceder o orçamento.
    """

    def __init__(
        self,
        system: SystemDescriptor,
        region: RegionSpec,
        potential: PotentialSpec,
        max_level: int,
        radius: float | None = None,
        omega: float | None = None,
        budget: int | None = None,
    ) -> None:
        if (radius is None) == (omega is None):
            raise ContractViolationError(' ERRO: Informe exatamente um entre o raio r e a taxa ω.')
        if radius is not None and not radius > 0.0:
            raise ContractViolationError(f' ERRO: O raio deve ser positivo, recebido {radius!r}.')
        if omega is not None and not omega > 0.0:
            raise ContractViolationError(f' ERRO: ω deve ser positivo, recebido {omega!r}.')
        if max_level < 1:
            raise ContractViolationError(f' ERRO: Nível máximo inválido: {max_level}.')
        potential.check_system(system)
        self._system = system
        self._potential = potential
        self._radius = radius
        self._omega = omega
        self._max_level = max_level
        if radius is not None:
            self._surrogate: RegionSurrogate = bowen_surrogate(system, region, max_level, radius, budget)
        else:
            self._surrogate = metric_surrogate(system, region, max_level, omega, budget)
        self._sums = birkhoff_sums(system, potential, self._surrogate.states, max_level)
        self._levels: dict[int, _Level] = {}
        self._links: dict[int, sparse.csr_matrix] = {}
        self._lock = threading.RLock()
        logger.debug('Amostra de cobertura com %d pontos até o nível %d.', self._surrogate.count, max_level)

    @property
    def max_level(self) -> int:
        return self._max_level

    @property
    def surrogate(self) -> RegionSurrogate:
        return self._surrogate

    @property
    def is_translocal(self) -> bool:
        return self._omega is not None

    def level_radius(self, n: int) -> float:
        return math.exp(-self._omega * n) if self.is_translocal else self._radius

    def level(self, n: int) -> _Level:
        """
        O nível n, construído na primeira consulta.
        """
        if not 1 <= n <= self._max_level:
            raise ContractViolationError(f' ERRO: Nível {n} fora de [1, {self._max_level}].')
        with self._lock:
            if n not in self._levels:
                radius = self.level_radius(n)
                steps = 1 if self.is_translocal else n
                embedding = orbit_embedding(self._system, self._surrogate.states, steps)
                centers, owner = greedy_independent_set(conflict_graph(embedding, radius))
                pruned = _vitali_prune(embedding, centers, owner, radius)
                self._levels[n] = _Level(n, radius, embedding, centers, owner, pruned)
                logger.debug('Nível %d: %d bolas (%d após a poda).', n, centers.size, pruned.size)
            return self._levels[n]

    def link(self, n: int) -> sparse.csr_matrix:
        """
        Incidência (centros do nível n) × (centros do nível n+1): 1 quando
        alguma amostra da bola do nível n é coberta pela bola do nível n+1.
        """
        with self._lock:
            if n not in self._links:
                upper, lower = self.level(n), self.level(n + 1)
                rows = np.searchsorted(upper.centers, upper.owner)
                cols = np.searchsorted(lower.centers, lower.owner)
                data = np.ones(rows.shape[0])
                matrix = sparse.csr_matrix((data, (rows, cols)), shape=(upper.centers.size, lower.centers.size))
                matrix.data[:] = 1.0
                self._links[n] = matrix
            return self._links[n]

    def _ball_weights(self, n: int, s: float, members: np.ndarray) -> np.ndarray:
        return np.exp(-s * n + self._sums[members, n - 1])

    def _candidate(self, family: str, s: float, n_min: int, centers, levels, multiplicity) -> CoverWeight:
        centers = np.asarray(centers, dtype=np.int64)
        levels = np.asarray(levels, dtype=np.int64)
        multiplicity = np.asarray(multiplicity, dtype=float)
        weights = np.exp(-s * levels + self._sums[centers, levels - 1])
        radii = np.array([self.level_radius(int(n)) for n in levels]) if levels.size else np.empty(0)
        return CoverWeight(
            value=float(np.sum(multiplicity * weights)),
            s=s,
            radius=self._radius,
            omega=self._omega,
            n_min=n_min,
            potential=self._potential.identifier,
            family=family,
            centers=self._surrogate.states[centers],
            levels=levels,
            radii=radii,
            multiplicity=multiplicity,
            warnings=self._surrogate.warnings,
        )

    def _refined(self, s: float, start: int, top: int, n_min: int) -> CoverWeight:
        costs: dict[int, np.ndarray] = {}
        keep: dict[int, np.ndarray] = {}
        for n in range(top, start - 1, -1):
            own = self._ball_weights(n, s, self.level(n).centers)
            if n == top:
                costs[n] = own
                keep[n] = np.ones(own.shape[0], dtype=bool)
                continue
            split = self.link(n) @ costs[n + 1]
            keep[n] = own <= split
            costs[n] = np.where(keep[n], own, split)
        centers, levels, multiplicity = [], [], []
        paths = np.ones(self.level(start).centers.size)
        for n in range(start, top + 1):
            chosen = keep[n] & (paths > 0)
            level = self.level(n)
            centers.append(level.centers[chosen])
            levels.append(np.full(int(chosen.sum()), n))
            multiplicity.append(paths[chosen])
            if n < top:
                paths = self.link(n).T @ np.where(keep[n], 0.0, paths)
        return self._candidate(
            REFINED, s, n_min, np.concatenate(centers), np.concatenate(levels), np.concatenate(multiplicity)
        )

    def weight(
        self,
        s: float,
        n_min: int,
        depth: int = DEFAULT_COVER_DEPTH,
        max_level: int | None = None,
    ) -> CoverWeight:
        """
        O menor peso entre as famílias e os níveis n ∈ [N, max_level].

        Args:
            s (float): O parâmetro s.
            n_min (int): O N, N ≥ 1.
            depth (int, optional): Níveis além de N quando `max_level` é
                omitido. Defaults to DEFAULT_COVER_DEPTH.
            max_level (int | None, optional): O maior nível usado.

        Raises:
            ContractViolationError: Se o intervalo de níveis for inválido.

        Returns:
            CoverWeight: A melhor cobertura encontrada.
        """
        top = n_min + depth if max_level is None else max_level
        if n_min < 1 or top < n_min or top > self._max_level:
            raise ContractViolationError(f' ERRO: Níveis [{n_min}, {top}] fora de [1, {self._max_level}].')
        best: CoverWeight | None = None
        for n in range(n_min, top + 1):
            level = self.level(n)
            candidates = [
                self._candidate(UNIFORM, s, n_min, level.centers, np.full(level.centers.size, n),
                                np.ones(level.centers.size)),
                self._candidate(VITALI, s, n_min, level.pruned, np.full(level.pruned.size, n),
                                np.ones(level.pruned.size)),
            ]
            if n < top:
                candidates.append(self._refined(s, n, top, n_min))
            for candidate in candidates:
                if best is None or candidate.value < best.value:
                    best = candidate
        return best


def cover_weight(
    system: SystemDescriptor,
    region: RegionSpec,
    potential: PotentialSpec,
    s: float,
    radius: float,
    n_min: int,
    depth: int = DEFAULT_COVER_DEPTH,
    max_level: int | None = None,
    budget: int | None = None,
) -> CoverWeight:
    """
    M_Z(s, r, φ, N) por bolas de Bowen B_{n_j}(x_j, r), n_j ≥ N.

    Raises:
        ContractViolationError: Se r ≤ 0 ou N < 1.
        BudgetExceededError: Se a amostra exceder o orçamento.
    """
    top = n_min + depth if max_level is None else max_level
    builder = CoverBuilder(system, region, potential, top, radius=radius, budget=budget)
    return builder.weight(s, n_min, max_level=top)


def translocal_cover_weight(
    system: SystemDescriptor,
    region: RegionSpec,
    potential: PotentialSpec,
    s: float,
    omega: float,
    n_min: int,
    depth: int = DEFAULT_COVER_DEPTH,
    max_level: int | None = None,
    budget: int | None = None,
) -> CoverWeight:
    """
    M_{Z,ω}(s, φ, N) por bolas métricas B(x_j, e^{-ω n_j}), n_j ≥ N.

    Raises:
        ContractViolationError: Se ω ≤ 0 ou N < 1.
        BudgetExceededError: Se a amostra exceder o orçamento.
    """
    top = n_min + depth if max_level is None else max_level
    builder = CoverBuilder(system, region, potential, top, omega=omega, budget=budget)
    return builder.weight(s, n_min, max_level=top)


def cover_contains(system: SystemDescriptor, cover: CoverWeight, states: np.ndarray) -> bool:
    """
    Testa se todo estado de `states` está em algum elemento da cobertura.

    Bolas de Bowen usam d_{n_j}; bolas métricas (variante translocal), a
    métrica de base.
    """
    states = np.asarray(states, dtype=float)
    covered = np.zeros(states.shape[0], dtype=bool)
    translocal = cover.omega is not None
    for n in np.unique(cover.levels):
        members = cover.levels == n
        steps = 1 if translocal else int(n)
        stacked = np.concatenate((cover.centers[members], states), axis=0)
        embedding = orbit_embedding(system, stacked, steps)
        centers = np.arange(int(members.sum()))
        samples = np.arange(centers.size, stacked.shape[0])
        radius = float(cover.radii[members][0])
        covered |= _covered(embedding, centers, samples, radius)
    return bool(np.all(covered))
