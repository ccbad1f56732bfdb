"""
Dataset package: point-set documents
"""

from .point_sets import (
    configuration_from_dict,
    parse_configuration,
    load_configuration,
    save_configuration,
    file_digest,
    get_configuration_info,
)

__all__ = [
    'configuration_from_dict',
    'parse_configuration',
    'load_configuration',
    'save_configuration',
    'file_digest',
    'get_configuration_info',
]
