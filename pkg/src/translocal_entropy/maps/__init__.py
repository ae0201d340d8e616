"""
Catálogo de sistemas dinâmicos, regras de evolução, órbitas e potenciais.
"""
from translocal_entropy.maps.catalogue import (
    SystemDescriptor,
    coded_shift,
    full_shift,
    get_system,
    iterate_system,
    list_systems,
    product_system,
    toral_system,
)
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
from translocal_entropy.maps.potentials import (
    POTENTIAL_IDENTIFIERS,
    PotentialKind,
    PotentialSpec,
    birkhoff_sum,
    birkhoff_sums,
    parse_potential,
)

__all__ = [
    'POTENTIAL_IDENTIFIERS', 'PotentialKind', 'PotentialSpec', 'SystemDescriptor', 'birkhoff_sum',
    'birkhoff_sums', 'coded_shift', 'evaluate', 'full_shift', 'get_system',
    'iterate_system', 'itinerary', 'list_systems', 'log_derivative_profile',
    'log_derivative_sum',
    'orbit', 'orbit_array', 'parse_potential', 'preimage_length',
    'product_system', 'toral_eigen_data', 'toral_system',
]
