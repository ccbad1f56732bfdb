"""
Seeded verification campaigns: many random configurations, one search each.
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from src.criterion import CriterionInput, TheoremTag, check_hypotheses, guarantee_criterion
from src.geometry import ColoredConfiguration, TverbergWitness, random_configuration
from src.utils.config import SEARCH_CONFIG, get_logger
from src.utils.errors import SearchTimeout
from src.utils.reporting import TrialTracker

from .rainbow import RainbowPartition, find_colored_tverberg


logger = get_logger(__name__)


class TrialStatus(str, Enum):
    FOUND = 'found'
    NONE = 'none'
    TIMEOUT = 'timeout'


@dataclass
class TrialOutcome:
    seed: int
    status: TrialStatus
    digest: str
    elapsed: float
    partition: Optional[RainbowPartition] = None
    witness: Optional[TverbergWitness] = None
    configuration: Optional[ColoredConfiguration] = None

    def to_record(self):
        return {
            'seed': self.seed,
            'status': self.status.value,
            'digest': self.digest,
            'elapsed': self.elapsed,
            'faces': str(list(map(list, self.partition.key))) if self.partition else '',
            'common_point': ' '.join(self.witness.to_dict()['common_point']) if self.witness else '',
        }

    def to_dict(self):
        out = {'seed': self.seed, 'status': self.status.value, 'digest': self.digest}
        if self.partition is not None:
            out['partition'] = self.partition.to_dict()
            out['witness'] = self.witness.to_dict()
        if self.configuration is not None:
            out['configuration'] = self.configuration.to_dict()
        return out


@dataclass
class VerificationReport:
    theorem_tag: str
    d: int
    r: int
    cards: Tuple[int, ...]
    trials: int
    seed_base: int
    instances: int
    found: int
    timeouts: int
    failures: List[Tuple[int, str]]
    elapsed: float
    outcomes: List[TrialOutcome] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.found > self.instances or bool(self.failures) != (self.found < self.instances):
            raise ValueError(f"inconsistent report: found={self.found}, instances={self.instances}, "
                             f"failures={len(self.failures)}")

    @property
    def all_found(self) -> bool:
        return self.found == self.instances and self.timeouts == 0

    def to_dict(self, include_outcomes=False):
        out = {
            'theorem_tag': self.theorem_tag,
            'd': self.d,
            'r': self.r,
            'cards': list(self.cards),
            'trials': self.trials,
            'seed_base': self.seed_base,
            'instances': self.instances,
            'found': self.found,
            'timeouts': self.timeouts,
            'failures': [{'seed': s, 'digest': h} for s, h in self.failures],
            'elapsed': round(self.elapsed, 3),
        }
        failed = [o.to_dict() for o in self.outcomes if o.status != TrialStatus.FOUND and o.configuration]
        if failed:
            out['failed_configurations'] = failed
        if include_outcomes:
            out['outcomes'] = [o.to_dict() for o in self.outcomes]
        return out

    def tracker(self) -> TrialTracker:
        tracker = TrialTracker()
        for outcome in self.outcomes:
            tracker.update(outcome)
        return tracker

    def to_dataframe(self):
        return self.tracker().to_dataframe()

    def save_csv(self, path):
        return self.tracker().save_csv(path)


def run_trial(d, r, cards, seed, time_budget=None, keep_configuration=False) -> TrialOutcome:
    """One seeded configuration and one exhaustive search."""
    start = time.perf_counter()
    config = random_configuration(d, cards, seed)
    try:
        result = find_colored_tverberg(config, r, time_budget=time_budget)
    except SearchTimeout:
        logger.warning("seed %d timed out", seed)
        return TrialOutcome(seed, TrialStatus.TIMEOUT, config.digest(), time.perf_counter() - start,
                            configuration=config if keep_configuration else None)

    elapsed = time.perf_counter() - start
    if result is None:
        return TrialOutcome(seed, TrialStatus.NONE, config.digest(), elapsed,
                            configuration=config if keep_configuration else None)
    partition, witness = result
    return TrialOutcome(seed, TrialStatus.FOUND, config.digest(), elapsed, partition=partition, witness=witness)


def _run_trial_args(args):
    return run_trial(*args)


class CampaignRunner:
    """Runs seeded trials sequentially or over a process pool."""

    def __init__(
        self,
        d: int,
        r: int,
        cards: Sequence[int],
        workers: int = 1,
        time_budget: Optional[float] = None,
        progress_bar: Optional[bool] = None,
        keep_failures: bool = False,
        print_fn=print
    ):
        if r < 2:
            raise ValueError(f"r must be >= 2, got {r}")
        self.d = d
        self.r = r
        self.cards = tuple(cards)
        self.workers = max(1, workers)
        self.time_budget = time_budget
        self.progress_bar = SEARCH_CONFIG['progress_bar'] if progress_bar is None else progress_bar
        self.keep_failures = keep_failures
        self.print = print_fn

    def _outcomes(self, trials, seed_base):
        args = [(self.d, self.r, self.cards, seed_base + i, self.time_budget, self.keep_failures)
                for i in range(trials)]
        if self.workers == 1:
            for a in args:
                yield run_trial(*a)
            return
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            futures = [executor.submit(_run_trial_args, a) for a in args]
            for future in as_completed(futures):
                yield future.result()

    def run(self, trials: int, seed_base: int, theorem_tag: str) -> VerificationReport:
        if trials < 1:
            raise ValueError(f"trials must be >= 1, got {trials}")
        if seed_base < 0:
            raise ValueError(f"seed must be >= 0, got {seed_base}")

        start = time.perf_counter()
        outcomes = []
        tracker = TrialTracker()
        interval = SEARCH_CONFIG['log_interval']
        stream = tqdm(self._outcomes(trials, seed_base), total=trials, desc=f"r={self.r} {list(self.cards)}",
                      disable=not self.progress_bar)
        for i, outcome in enumerate(stream, start=1):
            outcomes.append(outcome)
            tracker.update(outcome)
            if i % interval == 0 or i == trials:
                self.print(f"  Trial {i}/{trials}, found {tracker.count(TrialStatus.FOUND.value)}")
        tracker.print_summary(print_fn=self.print)

        outcomes.sort(key=lambda o: o.seed)
        completed = [o for o in outcomes if o.status != TrialStatus.TIMEOUT]
        failures = [(o.seed, o.digest) for o in completed if o.status == TrialStatus.NONE]
        return VerificationReport(
            theorem_tag=theorem_tag,
            d=self.d,
            r=self.r,
            cards=self.cards,
            trials=trials,
            seed_base=seed_base,
            instances=len(completed),
            found=len(completed) - len(failures),
            timeouts=len(outcomes) - len(completed),
            failures=failures,
            elapsed=time.perf_counter() - start,
            outcomes=outcomes,
        )


def verify_theorem_instance(
    theorem_tag,
    d: int,
    r: int,
    cards: Sequence[int],
    trials: int,
    seed_base: int,
    workers: int = 1,
    time_budget: Optional[float] = None,
    print_fn=print,
) -> VerificationReport:
    """
    Campaign on a guaranteed instance; every completed trial should find a partition.
    For the uncolored tag, sum(cards) points are drawn, each its own class.
    """
    tag = check_hypotheses(theorem_tag, d, r, cards)
    if tag == TheoremTag.TVERBERG:
        cards = (1,) * sum(cards)
    runner = CampaignRunner(d, r, cards, workers=workers, time_budget=time_budget,
                            keep_failures=True, print_fn=print_fn)
    report = runner.run(trials, seed_base, tag.value)
    if report.failures:
        logger.error("%s: %d of %d instances without a partition", tag.value, len(report.failures), report.instances)
    return report


def hunt_counterexample(
    d: int,
    r: int,
    cards: Sequence[int],
    trials: int,
    seed_base: int,
    workers: int = 1,
    time_budget: Optional[float] = None,
    print_fn=print,
) -> VerificationReport:
    """Same campaign for arbitrary cards; failures are data, kept with their configurations."""
    criterion = guarantee_criterion(CriterionInput(d=d, r=r, cards=tuple(cards)))
    runner = CampaignRunner(d, r, cards, workers=workers, time_budget=time_budget,
                            keep_failures=True, print_fn=print_fn)
    return runner.run(trials, seed_base, criterion.theorem_tag.value)
