import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from src.utils.config import SEARCH_CONFIG  # noqa: E402


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run acceptance-scale tests')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: acceptance-scale campaigns and sweeps')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def _no_progress_bars(monkeypatch):
    monkeypatch.setitem(SEARCH_CONFIG, 'progress_bar', False)
