"""
Config loading and result serialization.
"""
from .config_loader import LoadedConfig, config_hash, load_config, parse_config, parse_document
from .report_writer import (
    COLUMNS,
    RunMetadata,
    compare_sweeps,
    emit_comparison,
    emit_results,
    flatten,
    parse_results,
    points_from_reports,
    reports_frame,
)

__all__ = [
    'COLUMNS',
    'LoadedConfig',
    'RunMetadata',
    'compare_sweeps',
    'config_hash',
    'emit_comparison',
    'emit_results',
    'flatten',
    'load_config',
    'parse_config',
    'parse_document',
    'parse_results',
    'points_from_reports',
    'reports_frame',
]
