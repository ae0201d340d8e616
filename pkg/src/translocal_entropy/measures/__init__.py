"""
Medidas invariantes, medidas de bolas e pressões locais.
"""
from translocal_entropy.measures.bowen import (
    EXACT,
    QUASI_MONTE_CARLO,
    MeasureEstimate,
    ball_measure,
    bowen_ball_measure,
)
from translocal_entropy.measures.descriptors import (
    MEASURE_IDENTIFIERS,
    MeasureDescriptor,
    MeasureKind,
    is_certified,
    parse_measure,
    require_certificate,
)
from translocal_entropy.measures.local import (
    LocalPressureEstimate,
    brin_katok,
    local_pressure,
    translocal_local_pressure,
)

__all__ = [
    'EXACT', 'MEASURE_IDENTIFIERS', 'QUASI_MONTE_CARLO', 'LocalPressureEstimate',
    'MeasureDescriptor', 'MeasureEstimate', 'MeasureKind', 'ball_measure',
    'bowen_ball_measure', 'brin_katok', 'is_certified', 'local_pressure',
    'parse_measure', 'require_certificate', 'translocal_local_pressure',
]
