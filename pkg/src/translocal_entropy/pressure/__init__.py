"""
Pressão de Carathéodory: pesos de coberturas, expoentes críticos e a
auditoria das desigualdades entre pressões locais e globais.
"""
from translocal_entropy.pressure.audit import AuditReport, ma_wen_audit, sample_region
from translocal_entropy.pressure.covers import (
    COVER_FAMILIES,
    REFINED,
    UNIFORM,
    VITALI,
    CoverBuilder,
    CoverWeight,
    cover_contains,
    cover_weight,
    translocal_cover_weight,
)
from translocal_entropy.pressure.critical import CriticalExponent, ExponentVariant, critical_exponent, n_trend
from translocal_entropy.pressure.regions import (
    RegionSpec,
    RegionSurrogate,
    bowen_surrogate,
    metric_surrogate,
)

__all__ = [
    'COVER_FAMILIES', 'REFINED', 'UNIFORM', 'VITALI', 'AuditReport',
    'CoverBuilder', 'CoverWeight', 'CriticalExponent', 'ExponentVariant',
    'RegionSpec', 'RegionSurrogate', 'bowen_surrogate', 'cover_contains',
    'cover_weight', 'critical_exponent', 'ma_wen_audit', 'metric_surrogate',
    'n_trend', 'sample_region', 'translocal_cover_weight',
]
