"""
Grafo de conflitos de Bowen e conjuntos separados gulosos.

A distância de Bowen d_n é a distância de Chebyshev entre os vetores de
órbita (x, f(x), ..., f^{n-1}(x)) quando a métrica de base é a do máximo
por coordenada (círculo, toro, intervalo). Uma `cKDTree` sobre esses
vetores (periódica no círculo e no toro) lista, de uma vez, todos os pares
a distância ≤ ε; o conjunto separado guloso é o conjunto independente
maximal desse grafo na ordem de varredura da grade. No disco a árvore usa
as coordenadas cartesianas como pré-filtro de Chebyshev, e os pares são
confirmados pela norma euclidiana passo a passo.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.spatial import cKDTree

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.dynamics import orbit_array
from translocal_entropy.phase_space.points import SpaceKind, to_cartesian
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OrbitEmbedding:
    """
    Vetores de órbita de um lote de estados.

    Attributes:
        vectors (np.ndarray): Matriz (N, n·k) usada pela árvore.
        steps (int): Número de passos n da órbita.
        periodic (bool): Coordenadas periódicas de período 1.
        euclidean (bool): Cada passo usa a norma euclidiana (disco).
    """
    vectors: np.ndarray
    steps: int
    periodic: bool
    euclidean: bool

    @property
    def size(self) -> int:
        return int(self.vectors.shape[0])

    def step_distances(self, first: np.ndarray, second: np.ndarray) -> np.ndarray:
        """
        Distância de Bowen exata entre as linhas `first[i]` e `second[i]`.
        """
        a = self.vectors[first].reshape(len(first), self.steps, -1)
        b = self.vectors[second].reshape(len(second), self.steps, -1)
        if self.euclidean:
            return np.max(np.linalg.norm(a - b, axis=-1), axis=-1)
        delta = np.abs(a - b)
        if self.periodic:
            delta = np.minimum(delta, 1.0 - delta)
        return np.max(delta, axis=(1, 2))


def orbit_embedding(system: SystemDescriptor, states: np.ndarray, n: int) -> OrbitEmbedding:
    """
    Constrói os vetores de órbita de comprimento n de um lote de estados.

    Raises:
        ContractViolationError: Para espaços simbólicos (use a contagem exata).
    """
    kind = system.kind
    if kind is SpaceKind.SYMBOLIC:
        raise ContractViolationError(' ERRO: Espaços simbólicos usam a contagem exata por palavras.')
    orbits = orbit_array(system, np.asarray(states, dtype=float), n)
    if kind is SpaceKind.DISK:
        orbits = to_cartesian(orbits)
    vectors = orbits.reshape(orbits.shape[0], -1)
    periodic = kind in (SpaceKind.CIRCLE, SpaceKind.TORUS)
    if periodic:
        vectors = np.mod(vectors, 1.0)
        vectors[vectors >= 1.0] = 0.0
    return OrbitEmbedding(vectors=vectors, steps=n, periodic=periodic, euclidean=kind is SpaceKind.DISK)


def conflict_graph(embedding: OrbitEmbedding, radius: float, strict: bool = True) -> sparse.csr_matrix:
    """
    Grafo (simétrico) dos pares não separados.

    Args:
        embedding (OrbitEmbedding): Os vetores de órbita.
        radius (float): O raio ε.
        strict (bool, optional): Separação estrita d_n > ε; com False,
            separação d_n ≥ ε. Defaults to True.

    Returns:
        sparse.csr_matrix: Matriz de adjacência booleana (N, N).
    """
    if not radius > 0.0:
        raise ContractViolationError(f' ERRO: Raio deve ser positivo, recebido {radius!r}.')
    reach = radius if strict else float(np.nextafter(radius, 0.0))
    tree = cKDTree(embedding.vectors, boxsize=1.0 if embedding.periodic else None)
    pairs = tree.query_pairs(reach, p=np.inf, output_type='ndarray')
    if embedding.euclidean and len(pairs):
        exact = embedding.step_distances(pairs[:, 0], pairs[:, 1])
        pairs = pairs[exact <= reach]
    size = embedding.size
    rows = np.concatenate((pairs[:, 0], pairs[:, 1])) if len(pairs) else np.empty(0, dtype=int)
    cols = np.concatenate((pairs[:, 1], pairs[:, 0])) if len(pairs) else np.empty(0, dtype=int)
    data = np.ones(rows.shape[0], dtype=bool)
    logger.debug('Grafo de conflitos: %d vértices, %d pares.', size, len(pairs))
    return sparse.csr_matrix((data, (rows, cols)), shape=(size, size))


def greedy_independent_set(graph: sparse.csr_matrix) -> tuple[np.ndarray, np.ndarray]:
    """
    Conjunto independente maximal guloso, na ordem dos vértices.

    Cada vértice não admitido é atribuído ao primeiro vértice admitido que
    o bloqueou; como o conjunto é maximal, essa atribuição é uma cobertura
    por bolas de raio ε centradas nos admitidos.

    Returns:
        tuple[np.ndarray, np.ndarray]: (índices admitidos, dono de cada vértice).
    """
    size = graph.shape[0]
    owner = np.full(size, -1, dtype=np.int64)
    admitted = []
    indptr, indices = graph.indptr, graph.indices
    for vertex in range(size):
        if owner[vertex] >= 0:
            continue
        admitted.append(vertex)
        owner[vertex] = vertex
        neighbours = indices[indptr[vertex]:indptr[vertex + 1]]
        free = neighbours[owner[neighbours] < 0]
        owner[free] = vertex
    return np.asarray(admitted, dtype=np.int64), owner


def greedy_cover(
    system: SystemDescriptor,
    states: np.ndarray,
    n: int,
    radius: float,
    strict: bool = True,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Centros de um conjunto (n, radius)-separado maximal e a atribuição de
    cada estado ao centro que o cobre.
    """
    embedding = orbit_embedding(system, states, n)
    return greedy_independent_set(conflict_graph(embedding, radius, strict))
