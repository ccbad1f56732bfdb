"""
Search package: rainbow faces, partition search and seeded campaigns
"""

from .rainbow import (
    RainbowFace,
    RainbowPartition,
    enumerate_rainbow_faces,
    find_colored_tverberg,
    find_uncolored_tverberg,
    enumerate_all_tverberg,
    is_valid_partition,
)
from .campaign import (
    TrialStatus,
    TrialOutcome,
    VerificationReport,
    CampaignRunner,
    run_trial,
    verify_theorem_instance,
    hunt_counterexample,
)


__all__ = [
    'RainbowFace',
    'RainbowPartition',
    'enumerate_rainbow_faces',
    'find_colored_tverberg',
    'find_uncolored_tverberg',
    'enumerate_all_tverberg',
    'is_valid_partition',
    'TrialStatus',
    'TrialOutcome',
    'VerificationReport',
    'CampaignRunner',
    'run_trial',
    'verify_theorem_instance',
    'hunt_counterexample',
]
