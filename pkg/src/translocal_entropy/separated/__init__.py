"""
Métricas de Bowen e estimação de conjuntos (n, ε)-separados maximais.
"""
from translocal_entropy.separated.counting import (
    EXACT_SYMBOLIC,
    GREEDY,
    SeparationQuery,
    SeparationResult,
    bowen_distance,
    required_resolution,
    separated_count,
    separation_length,
    symbolic_word_count,
)
from translocal_entropy.separated.greedy import (
    OrbitEmbedding,
    conflict_graph,
    greedy_cover,
    greedy_independent_set,
    orbit_embedding,
)
from translocal_entropy.separated.planning import PlannedGrid, expansion_bound, plan_grid

__all__ = [
    'EXACT_SYMBOLIC', 'GREEDY', 'OrbitEmbedding', 'PlannedGrid',
    'SeparationQuery', 'SeparationResult', 'bowen_distance', 'conflict_graph',
    'expansion_bound', 'greedy_cover', 'greedy_independent_set',
    'orbit_embedding', 'plan_grid', 'required_resolution', 'separated_count',
    'separation_length', 'symbolic_word_count',
]
