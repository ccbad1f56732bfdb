"""
Reporting utilities: campaign trial tracking, summaries and JSON emission
"""

import json
from pathlib import Path

import pandas as pd


TRIAL_COLUMNS = ['seed', 'status', 'digest', 'elapsed', 'faces', 'common_point']


def dump_report(report, indent=2):
    """Deterministic JSON text for a report dict."""
    return json.dumps(report, sort_keys=True, indent=indent)


def print_report(summary, prefix='', print_fn=print):
    """Print a flat summary dict in aligned `key: value` lines."""
    if prefix:
        print_fn(f"\n{prefix}")
    width = max((len(str(k)) for k in summary), default=0)
    for key, value in summary.items():
        if isinstance(value, float):
            value = f"{value:.3f}"
        elif isinstance(value, (list, tuple)):
            value = ', '.join(str(v) for v in value)
        print_fn(f"  {str(key) + ':':<{width + 1}} {value}")


class TrialTracker:
    """Track per-trial outcomes of a campaign."""

    def __init__(self):
        self.history = {col: [] for col in TRIAL_COLUMNS}

    def update(self, outcome):
        record = outcome.to_record()
        for col in TRIAL_COLUMNS:
            self.history[col].append(record.get(col))

    def __len__(self):
        return len(self.history['seed'])

    def count(self, status):
        return sum(1 for s in self.history['status'] if s == status)

    def to_dataframe(self):
        return pd.DataFrame(self.history, columns=TRIAL_COLUMNS).sort_values('seed').reset_index(drop=True)

    def save_csv(self, path):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_dataframe().to_csv(path, index=False)
        return path

    def print_summary(self, print_fn=print):
        print_fn("CAMPAIGN SUMMARY")
        total = len(self)
        print_fn(f"Trials:   {total}")
        for status in ('found', 'none', 'timeout'):
            print_fn(f"{status.capitalize() + ':':<9} {self.count(status)}")
        if total:
            df = self.to_dataframe()
            print_fn(f"Elapsed per trial: mean {df['elapsed'].mean():.3f}s, max {df['elapsed'].max():.3f}s")
