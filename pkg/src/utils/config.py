"""
Configuration for the colored Tverberg toolkit
"""

import logging
import os
from pathlib import Path

import psutil
from dotenv import load_dotenv


BASE_DIR = Path(__file__).parent.parent.parent

RESULTS_DIR = BASE_DIR / "results"


COMPLEX_CONFIG = {
    # Complexes larger than this refuse to build
    'face_budget': 10**6,
}


HOMOLOGY_CONFIG = {
    # Integral SNF only for boundary matrices up to this many columns
    'snf_column_budget': 2 * 10**4,
    'default_coefficients': ['Z'],
    'fallback_coefficients': ['Q', 'Z2', 'Z3'],
}


GEOMETRY_CONFIG = {
    'coordinate_bound': 1000,
    'max_denominator': 1000,
    'verify_witnesses': True,
    'max_regenerations': 10000,
}


SEARCH_CONFIG = {
    'time_budget_secs': 60,
    'num_workers': 1,
    'bbox_pretest': True,
    'progress_bar': True,
    # Cap for enumerate-all mode
    'enumerate_limit': 1000,
    # Campaign progress line every N trials
    'log_interval': 50,
}


LOGGING_CONFIG = {
    'level': 'INFO',
    'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
    'datefmt': '%H:%M:%S',
}


ENV_OVERRIDES = {
    'TVB_FACE_BUDGET': (COMPLEX_CONFIG, 'face_budget', int),
    'TVB_TIME_BUDGET_SECS': (SEARCH_CONFIG, 'time_budget_secs', float),
}


def load_env_overrides(dotenv_path=None):
    """Apply `.env` and environment variable overrides onto the config dicts."""
    load_dotenv(dotenv_path=dotenv_path, override=False)

    applied = {}
    for var, (section, key, cast) in ENV_OVERRIDES.items():
        raw = os.environ.get(var)
        if raw is None or raw.strip() == '':
            continue
        try:
            value = cast(raw)
        except ValueError:
            raise ValueError(f"{var} must be a number, got {raw!r}")
        if value <= 0:
            raise ValueError(f"{var} must be positive, got {raw!r}")
        section[key] = value
        applied[var] = value
    return applied


def get_face_budget():
    return COMPLEX_CONFIG['face_budget']


def get_snf_column_budget():
    return HOMOLOGY_CONFIG['snf_column_budget']


def get_time_budget():
    return SEARCH_CONFIG['time_budget_secs']


def get_default_workers():
    cores = psutil.cpu_count(logical=False)
    return cores if cores else 1


_LOGGING_READY = False


def get_logger(name):
    global _LOGGING_READY
    if not _LOGGING_READY:
        logging.basicConfig(
            level=LOGGING_CONFIG['level'],
            format=LOGGING_CONFIG['format'],
            datefmt=LOGGING_CONFIG['datefmt'],
        )
        _LOGGING_READY = True
    return logging.getLogger(name)


def create_directories():
    dirs = [RESULTS_DIR]
    for d in dirs:
        d.mkdir(parents=True, exist_ok=True)
