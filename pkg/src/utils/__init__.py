"""
Utils package for the colored Tverberg toolkit
"""

from .reporting import (
    dump_report,
    print_report,
    TrialTracker
)

from .config import (
    COMPLEX_CONFIG,
    HOMOLOGY_CONFIG,
    GEOMETRY_CONFIG,
    SEARCH_CONFIG,
    LOGGING_CONFIG,
    load_env_overrides,
    get_face_budget,
    get_snf_column_budget,
    get_time_budget,
    get_default_workers,
    get_logger,
    create_directories,
    BASE_DIR,
    RESULTS_DIR
)

from .errors import (
    FaceBudgetExceeded,
    ConfigurationParseError,
    SearchTimeout,
    HypothesisMismatch
)


__all__ = [
    'dump_report',
    'print_report',
    'TrialTracker',
    'COMPLEX_CONFIG',
    'HOMOLOGY_CONFIG',
    'GEOMETRY_CONFIG',
    'SEARCH_CONFIG',
    'LOGGING_CONFIG',
    'load_env_overrides',
    'get_face_budget',
    'get_snf_column_budget',
    'get_time_budget',
    'get_default_workers',
    'get_logger',
    'create_directories',
    'BASE_DIR',
    'RESULTS_DIR',
    'FaceBudgetExceeded',
    'ConfigurationParseError',
    'SearchTimeout',
    'HypothesisMismatch'
]
