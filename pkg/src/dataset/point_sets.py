"""
Point-set documents: colored configurations stored as JSON or YAML.

    {"dimension": 2,
     "points": [["0/1", "0/1"], ["2/1", "2/1"], ...],
     "colors": [[0, 2], [1, 3]]}

Coordinates are exact "p/q" strings (plain integers are accepted too); colors
are zero-based point indices. Unknown fields are rejected.
"""

import hashlib
import json
from pathlib import Path
from typing import Union

import yaml

from src.geometry import ColoredConfiguration, parse_rational
from src.utils.errors import ConfigurationParseError


FIELDS = ('dimension', 'points', 'colors')
SUFFIXES = {'.json': 'json', '.yaml': 'yaml', '.yml': 'yaml'}


def _decode(text: str, fmt: str):
    if fmt == 'json':
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigurationParseError(e.msg, line=e.lineno, column=e.colno)
    if fmt == 'yaml':
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, 'problem_mark', None)
            problem = getattr(e, 'problem', None) or str(e)
            if mark is not None:
                raise ConfigurationParseError(problem, line=mark.line + 1, column=mark.column + 1)
            raise ConfigurationParseError(problem)
    raise ConfigurationParseError(f"unsupported format {fmt!r}; use json or yaml")


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def configuration_from_dict(doc) -> ColoredConfiguration:
    """Strictly validate a decoded document and build the configuration."""
    if not isinstance(doc, dict):
        raise ConfigurationParseError("top level must be a mapping with fields " + ', '.join(FIELDS))
    for key in doc:
        if key not in FIELDS:
            raise ConfigurationParseError("unknown field", field=str(key))
    for key in FIELDS:
        if key not in doc:
            raise ConfigurationParseError("missing required field", field=key)

    d = doc['dimension']
    if not _is_int(d) or d < 1:
        raise ConfigurationParseError(f"must be a positive integer, got {d!r}", field='dimension')

    raw_points = doc['points']
    if not isinstance(raw_points, list):
        raise ConfigurationParseError("must be an array of points", field='points')
    points = []
    for i, raw in enumerate(raw_points):
        if not isinstance(raw, list) or len(raw) != d:
            raise ConfigurationParseError(f"must be an array of {d} coordinates", field=f'points[{i}]')
        coords = []
        for t, value in enumerate(raw):
            try:
                coords.append(parse_rational(value))
            except ValueError as e:
                raise ConfigurationParseError(str(e), field=f'points[{i}][{t}]')
        points.append(tuple(coords))

    raw_colors = doc['colors']
    if not isinstance(raw_colors, list):
        raise ConfigurationParseError("must be an array of color classes", field='colors')
    classes = []
    for c, cls in enumerate(raw_colors):
        if not isinstance(cls, list) or not all(_is_int(i) for i in cls):
            raise ConfigurationParseError("must be an array of point indices", field=f'colors[{c}]')
        classes.append(tuple(cls))

    try:
        return ColoredConfiguration(d=d, points=tuple(points), color_classes=tuple(classes))
    except ValueError as e:
        raise ConfigurationParseError(str(e), field='colors')


def parse_configuration(text: str, fmt: str = 'json') -> ColoredConfiguration:
    return configuration_from_dict(_decode(text, fmt))


def _format_for(path: Path) -> str:
    fmt = SUFFIXES.get(path.suffix.lower())
    if fmt is None:
        raise ConfigurationParseError(f"unsupported file type '{path.suffix}' for {path.name}; use .json, .yaml or .yml")
    return fmt


def load_configuration(path: Union[str, Path]) -> ColoredConfiguration:
    path = Path(path)
    fmt = _format_for(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigurationParseError(f"cannot read {path}: {e.strerror}")
    return parse_configuration(text, fmt)


def save_configuration(config: ColoredConfiguration, path: Union[str, Path]) -> Path:
    path = Path(path)
    fmt = _format_for(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = config.to_dict()
    if fmt == 'json':
        path.write_text(json.dumps(doc, indent=2) + '\n', encoding='utf-8')
    else:
        path.write_text(yaml.safe_dump(doc, sort_keys=False), encoding='utf-8')
    return path


def file_digest(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def get_configuration_info(config: ColoredConfiguration):
    return {
        'dimension': config.d,
        'num_points': config.n_points,
        'num_colors': len(config.color_classes),
        'cards': list(config.cards),
        'digest': config.digest(),
    }
