"""
Avaliação de mapas, órbitas e dados de derivada dos sistemas do catálogo.
"""
from __future__ import annotations

import math

import numpy as np

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.rules import PiecewiseRule
from translocal_entropy.phase_space.points import (
    PhasePoint,
    SpaceKind,
    array_to_points,
    points_to_array,
)
from translocal_entropy.utils.errors import (
    ContractViolationError,
    HorizonExceededError,
    SingularOrbitError,
)
from translocal_entropy.utils.settings import current_settings

__status__ = 'Production'

EIGENVALUE_GROUP_TOLERANCE = 1e-9


def _check_point(system: SystemDescriptor, point: PhasePoint) -> None:
    if point.kind is not system.kind:
        raise ContractViolationError(
            f' ERRO: Ponto do espaço {point.kind.value} fora do espaço de {system.identifier}.'
        )


def _check_horizon(n: int) -> None:
    if n < 1:
        raise ContractViolationError(f' ERRO: Comprimento de órbita deve ser ≥ 1, recebido {n}.')
    cap = current_settings().horizon_cap
    if n > cap:
        raise HorizonExceededError(cap)


def evaluate(system: SystemDescriptor, point: PhasePoint) -> PhasePoint:
    """
    Calcula f(x), reduzido ao espaço de fase.

    Raises:
        ContractViolationError: Se o ponto não pertencer ao espaço do sistema.
    """
    _check_point(system, point)
    if system.is_symbolic:
        return point.shifted(1, two_sided=system.metric.two_sided)
    image = system.rule.apply(points_to_array([point], system.metric))
    return array_to_points(image, system.metric)[0]


def orbit(system: SystemDescriptor, point: PhasePoint, n: int) -> list[PhasePoint]:
    """
    O segmento de órbita [x, f(x), ..., f^{n-1}(x)].

    Args:
        system (SystemDescriptor): O sistema.
        point (PhasePoint): O ponto inicial.
        n (int): Comprimento do segmento (1 ≤ n ≤ horizonte configurado).

    Raises:
        ContractViolationError: Se n < 1 ou o ponto estiver fora do espaço.
        HorizonExceededError: Se n exceder `TRANSLOCAL_HORIZON_CAP`.

    Returns:
        list[PhasePoint]: Os n primeiros pontos da órbita.
    """
    _check_point(system, point)
    _check_horizon(n)
    segment = [point]
    for _ in range(n - 1):
        segment.append(evaluate(system, segment[-1]))
    return segment


def orbit_array(system: SystemDescriptor, states: np.ndarray, n: int) -> np.ndarray:
    """
    Órbitas vetorizadas de um lote de estados.

    Args:
        system (SystemDescriptor): O sistema.
        states (np.ndarray): Lote de forma (N, k).
        n (int): Comprimento das órbitas.

    Returns:
        np.ndarray: Tensor de forma (N, n, k) com f^j dos estados em [:, j, :].
    """
    _check_horizon(n)
    orbits = np.empty((states.shape[0], n, states.shape[1]), dtype=states.dtype)
    current = states
    for j in range(n):
        orbits[:, j, :] = current
        if j < n - 1:
            current = system.rule.apply(current)
    return orbits


def log_derivative_profile(system: SystemDescriptor, point: PhasePoint, n: int) -> list[float]:
    """
    As somas parciais log|Df^m(x)| para m = 1, ..., n.

    Raises:
        ContractViolationError: Se o sistema não tiver regra de derivada.
        SingularOrbitError: Se a órbita atingir um ponto de não diferenciabilidade.
    """
    _check_point(system, point)
    _check_horizon(n)
    if not system.rule.has_derivative:
        raise ContractViolationError(f' ERRO: {system.identifier} não possui regra de derivada.')
    state = points_to_array([point], system.metric)
    total = 0.0
    profile = []
    for j in range(n):
        slope = float(system.rule.derivative(state)[0])
        if bool(system.rule.singular_mask(state)[0]) or slope == 0.0 or not math.isfinite(slope):
            raise SingularOrbitError(j, float(state[0, 0]))
        total += math.log(abs(slope))
        profile.append(total)
        state = system.rule.apply(state)
    return profile


def log_derivative_sum(system: SystemDescriptor, point: PhasePoint, n: int) -> float:
    """
    Soma de Birkhoff Σ_{j<n} log|f'(f^j x)| (regra da cadeia).

    Raises:
        ContractViolationError: Se o sistema não tiver regra de derivada.
        SingularOrbitError: Se a órbita atingir um ponto de não diferenciabilidade.

    Returns:
        float: log|Df^n(x)|.
    """
    return log_derivative_profile(system, point, n)[-1]


def toral_eigen_data(system: SystemDescriptor) -> list[tuple[float, int]]:
    """
    Módulos dos autovalores da matriz do automorfismo, com multiplicidade.

    Raises:
        ContractViolationError: Se o sistema não for tóral.

    Returns:
        list[tuple[float, int]]: Pares (módulo, multiplicidade) em ordem decrescente.
    """
    if system.matrix is None:
        raise ContractViolationError(f' ERRO: {system.identifier} não é um automorfismo do toro.')
    moduli = sorted(np.abs(np.linalg.eigvals(system.matrix)).tolist(), reverse=True)
    grouped: list[tuple[float, int]] = []
    for modulus in moduli:
        if grouped and math.isclose(grouped[-1][0], modulus, rel_tol=EIGENVALUE_GROUP_TOLERANCE):
            value, count = grouped[-1]
            grouped[-1] = (value, count + 1)
        else:
            grouped.append((modulus, 1))
    return grouped


def _piecewise_linear(system: SystemDescriptor) -> list[tuple[float, float, float, float]]:
    rule = system.rule
    branches = rule.linear_branches() if isinstance(rule, PiecewiseRule) else None
    if branches is None:
        raise ContractViolationError(f' ERRO: {system.identifier} não é linear por partes.')
    return branches


def preimage_length(system: SystemDescriptor, left: float, right: float) -> float:
    """
    Comprimento de Lebesgue de f^{-1}([left, right]) para mapas lineares por partes.

    Em cada ramo afim y = s·x + c, o levantamento da imagem é intersectado
    com as translações inteiras do alvo (somente a translação nula em
    regras do intervalo) e o comprimento é dividido por |s|.

    Raises:
        ContractViolationError: Se o sistema não for linear por partes ou o alvo for inválido.
    """
    if not 0.0 <= left <= right <= 1.0:
        raise ContractViolationError(f' ERRO: Intervalo alvo inválido [{left}, {right}].')
    branches = _piecewise_linear(system)
    periodic = system.rule.periodic
    total = 0.0
    for start, end, slope, intercept in branches:
        low, high = sorted((slope * start + intercept, slope * end + intercept))
        shifts = range(math.floor(low) - 1, math.ceil(high) + 1) if periodic else (0,)
        covered = sum(max(0.0, min(high, right + m) - max(low, left + m)) for m in shifts)
        total += covered / abs(slope)
    return total


def itinerary(system: SystemDescriptor, point: PhasePoint, n: int) -> PhasePoint:
    """
    O itinerário de x em relação aos ramos do mapa: o símbolo j é o índice
    do ramo que contém f^j(x).

    Raises:
        ContractViolationError: Se a regra não for definida por ramos.
    """
    _check_point(system, point)
    _check_horizon(n)
    rule = system.rule
    if not isinstance(rule, PiecewiseRule) or system.kind is SpaceKind.SYMBOLIC:
        raise ContractViolationError(f' ERRO: {system.identifier} não é definido por ramos.')
    orbits = orbit_array(system, points_to_array([point], system.metric), n)[0]
    return PhasePoint.symbolic(rule.branch_index(orbits).tolist())
