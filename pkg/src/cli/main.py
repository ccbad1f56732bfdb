"""
Command-line front end.

    python -m src.cli chessboard 3 2 --coeff Q
    python -m src.cli criterion -d 3 -r 9 --cards 17,17,11,14
    python -m src.cli verify --theorem zv -d 2 -r 2 --cards 3,3,3 --trials 200 --seed 7
    python -m src.cli find points.json -r 2

Exit codes: 0 success, 1 mathematical negative, 2 usage or parse error,
3 resource budget exceeded.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from src import __version__
from src.complexes import chessboard, chessboard_join
from src.criterion import (
    CriterionInput,
    chessboard_connectivity_formula,
    guarantee_criterion,
    join_connectivity_lower_bound,
    factor_connectivity,
)
from src.dataset import file_digest, load_configuration
from src.experiments.chessboard_sweep import DISAGREE, connectivity_verdict, failing_cells, sweep_records
from src.geometry import ColoredConfiguration
from src.homology import betti_numbers, default_coefficient_list, homological_connectivity
from src.search import (
    enumerate_all_tverberg,
    find_colored_tverberg,
    hunt_counterexample,
    verify_theorem_instance,
)
from src.utils.config import (
    RESULTS_DIR,
    SEARCH_CONFIG,
    get_default_workers,
    get_face_budget,
    get_logger,
    get_snf_column_budget,
    get_time_budget,
    load_env_overrides,
)
from src.utils.errors import ConfigurationParseError, FaceBudgetExceeded, HypothesisMismatch, SearchTimeout
from src.utils.reporting import dump_report, print_report


logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# fields excluded when comparing two reports of the same manifest
TIMING_FIELDS = ('elapsed',)


@dataclass
class RunManifest:
    command: str
    params: Dict
    version: str = __version__
    input_digests: Dict[str, str] = field(default_factory=dict)
    budgets: Dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunManifest':
        """Argparse values plus the budgets in effect once env overrides are applied."""
        params = {}
        for key, value in sorted(vars(args).items()):
            if key in ('func', 'command', 'json_only', 'output', 'trials_csv'):
                continue
            if isinstance(value, Path):
                value = str(value)
            elif isinstance(value, tuple):
                value = list(value)
            params[key] = value
        return cls(command=args.command, params=params, budgets=effective_budgets(args))

    def to_dict(self):
        return {
            'command': self.command,
            'params': self.params,
            'version': self.version,
            'input_digests': dict(sorted(self.input_digests.items())),
            'budgets': dict(sorted(self.budgets.items())),
        }


def parse_cards(text: str):
    try:
        cards = tuple(int(part) for part in text.split(',') if part.strip() != '')
    except ValueError:
        raise argparse.ArgumentTypeError(f"cards must be comma-separated integers, got {text!r}")
    if not cards or any(c < 0 for c in cards):
        raise argparse.ArgumentTypeError(f"cards must be nonnegative and nonempty, got {text!r}")
    return cards


def positive_int(text: str):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def nonnegative_int(text: str):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def positive_float(text: str):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _workers(args) -> int:
    return get_default_workers() if args.workers == 0 else args.workers


def effective_budgets(args) -> Dict:
    return {
        'face_budget': get_face_budget() if args.face_budget is None else args.face_budget,
        'time_budget_secs': get_time_budget() if args.time_budget is None else args.time_budget,
        'snf_column_budget': get_snf_column_budget(),
        'workers': _workers(args),
    }


# ---------------------------------------------------------------------------
# Commands. Each returns (report body, exit code, summary dict).
# ---------------------------------------------------------------------------

def cmd_chessboard(args):
    if args.m < 1 or args.n < 1:
        raise ValueError(f"m and n must be >= 1, got m={args.m}, n={args.n}")
    K = chessboard(args.m, args.n, face_budget=args.face_budget)
    coeffs = args.coeff or default_coefficient_list(K)
    profiles = [betti_numbers(K, c) for c in coeffs]
    estimate = homological_connectivity(K, coeffs)
    formula = chessboard_connectivity_formula(args.m, args.n)
    verdict = connectivity_verdict(estimate, formula)

    body = {
        'm': args.m,
        'n': args.n,
        'f_vector': list(K.f_vector()),
        'homology': [p.to_dict() for p in profiles],
        'connectivity': estimate.to_dict(),
        'formula': formula,
        'verdict': verdict,
        'agree': verdict == 'agree',
    }
    summary = {
        'complex': f"Δ_{{{args.m},{args.n}}}",
        'f-vector': list(K.f_vector()),
        'hconn': estimate.hconn,
        'formula': formula,
        'verdict': verdict,
    }
    return body, (EXIT_NEGATIVE if verdict == DISAGREE else EXIT_OK), summary


def cmd_join(args):
    K = chessboard_join(args.cards, args.r, face_budget=args.face_budget)
    coeffs = args.coeff or default_coefficient_list(K)
    estimate = homological_connectivity(K, coeffs)
    bound = join_connectivity_lower_bound([factor_connectivity(c, args.r) for c in args.cards])
    consistent = estimate.all_vanishing or estimate.hconn >= bound

    body = {
        'cards': list(args.cards),
        'r': args.r,
        'f_vector': list(K.f_vector()),
        'homology': [betti_numbers(K, c).to_dict() for c in coeffs] if not K.is_empty() else [],
        'connectivity': estimate.to_dict(),
        'join_conn_lower': bound,
        'consistent': consistent,
    }
    summary = {'cards': list(args.cards), 'r': args.r, 'hconn': estimate.hconn,
               'join bound': bound, 'consistent': consistent}
    return body, (EXIT_OK if consistent else EXIT_NEGATIVE), summary


def cmd_criterion(args):
    report = guarantee_criterion(CriterionInput(d=args.d, r=args.r, cards=args.cards))
    summary = {
        'applicable': report.applicable,
        'join conn lower': report.join_conn_lower,
        'sphere index': report.sphere_index,
        'guaranteed': report.guaranteed,
        'theorem': report.theorem_tag.value,
    }
    return report.to_dict(), EXIT_OK, summary


def _campaign_result(args, report):
    if args.trials_csv:
        report.save_csv(args.trials_csv)
    summary = {
        'theorem': report.theorem_tag,
        'instances': report.instances,
        'found': report.found,
        'timeouts': report.timeouts,
        'failures': [seed for seed, _ in report.failures],
    }
    return report.to_dict(), summary


def cmd_verify(args):
    report = verify_theorem_instance(
        args.theorem, args.d, args.r, args.cards, args.trials, args.seed,
        workers=_workers(args), time_budget=args.time_budget, print_fn=logger.info,
    )
    body, summary = _campaign_result(args, report)
    if report.failures:
        code = EXIT_NEGATIVE
    elif report.timeouts:
        code = EXIT_BUDGET
    else:
        code = EXIT_OK
    return body, code, summary


def cmd_hunt(args):
    report = hunt_counterexample(
        args.d, args.r, args.cards, args.trials, args.seed,
        workers=_workers(args), time_budget=args.time_budget, print_fn=logger.info,
    )
    body, summary = _campaign_result(args, report)
    return body, (EXIT_BUDGET if report.timeouts else EXIT_OK), summary


def cmd_find(args, manifest):
    config = load_configuration(args.config)
    manifest.input_digests[str(args.config)] = file_digest(args.config)
    if args.uncolored:
        config = ColoredConfiguration.uncolored(config.points, config.d)

    body = {'configuration': config.to_dict(), 'digest': config.digest(), 'r': args.r}
    if args.all:
        results = enumerate_all_tverberg(config, args.r, limit=args.limit, time_budget=args.time_budget)
        body['partitions'] = [{'partition': p.to_dict(), 'witness': w.to_dict()} for p, w in results]
        summary = {'points': config.n_points, 'r': args.r, 'partitions found': len(results)}
        return body, (EXIT_OK if results else EXIT_NEGATIVE), summary

    result = find_colored_tverberg(config, args.r, workers=_workers(args), time_budget=args.time_budget)
    if result is None:
        body['result'] = 'none'
        return body, EXIT_NEGATIVE, {'points': config.n_points, 'r': args.r, 'result': 'none'}
    partition, witness = result
    body['result'] = 'found'
    body['partition'] = partition.to_dict()
    body['witness'] = witness.to_dict()
    summary = {
        'points': config.n_points,
        'r': args.r,
        'faces': [list(f) for f in partition.key],
        'common point': witness.to_dict()['common_point'],
    }
    return body, EXIT_OK, summary


def cmd_sweep(args):
    records = sweep_records(args.max_m, args.max_n, integral_limit=args.integral_limit,
                            face_budget=args.face_budget, print_fn=logger.info)
    csv_path = Path(args.csv) if args.csv else RESULTS_DIR / 'chessboard_sweep.csv'
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(records).to_csv(csv_path, index=False)

    rows = [{k: v for k, v in rec.items() if k != 'elapsed'} for rec in records]
    disagreements = [[int(r['m']), int(r['n'])] for r in rows if r['verdict'] == DISAGREE]
    failing = [list(cell) for cell in failing_cells(rows)]
    body = {'rows': rows, 'disagreements': disagreements, 'failing': failing, 'csv': str(csv_path)}
    summary = {'cells': len(rows), 'disagreements': disagreements, 'failing': failing, 'csv': str(csv_path)}
    return body, (EXIT_NEGATIVE if failing else EXIT_OK), summary


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json-only', action='store_true', help='Print only the JSON report')
    common.add_argument('--output', type=Path, default=None, help='Also write the JSON report to this file')
    common.add_argument('--workers', type=nonnegative_int, default=SEARCH_CONFIG['num_workers'],
                        help='Worker processes (0 = physical cores)')
    common.add_argument('--face-budget', type=positive_int, default=None, help='Override the face budget')
    common.add_argument('--time-budget', type=positive_float, default=None,
                        help='Per-instance search time budget in seconds')

    parser = argparse.ArgumentParser(prog='tverberg', description='Colored Tverberg toolkit')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('chessboard', parents=[common], help='Homology of a chessboard complex')
    p.add_argument('m', type=int)
    p.add_argument('n', type=int)
    p.add_argument('--coeff', action='append', default=None, help='Coefficients: Z, Q or Zp (repeatable)')
    p.set_defaults(func=cmd_chessboard)

    p = sub.add_parser('join', parents=[common], help='Homology of a join of chessboard complexes')
    p.add_argument('--cards', type=parse_cards, required=True)
    p.add_argument('-r', type=positive_int, required=True)
    p.add_argument('--coeff', action='append', default=None)
    p.set_defaults(func=cmd_join)

    p = sub.add_parser('criterion', parents=[common], help='Arithmetic guarantee for given class sizes')
    p.add_argument('-d', type=int, required=True)
    p.add_argument('-r', type=int, required=True)
    p.add_argument('--cards', type=parse_cards, required=True)
    p.set_defaults(func=cmd_criterion)

    for name, func, helptext in (('verify', cmd_verify, 'Campaign on a guaranteed instance'),
                                 ('hunt', cmd_hunt, 'Campaign below the theorem thresholds')):
        p = sub.add_parser(name, parents=[common], help=helptext)
        if name == 'verify':
            p.add_argument('--theorem', required=True)
        p.add_argument('-d', type=positive_int, required=True)
        p.add_argument('-r', type=int, required=True)
        p.add_argument('--cards', type=parse_cards, required=True)
        p.add_argument('--trials', type=positive_int, required=True)
        p.add_argument('--seed', type=nonnegative_int, required=True, help='Seed of trial 0; trial i uses seed+i')
        p.add_argument('--trials-csv', type=Path, default=None, help='Write per-trial outcomes as CSV')
        p.set_defaults(func=func)

    p = sub.add_parser('find', parents=[common], help='Search one configuration file')
    p.add_argument('config', type=Path)
    p.add_argument('-r', type=int, required=True)
    p.add_argument('--uncolored', action='store_true', help='Treat every point as its own color class')
    p.add_argument('--all', action='store_true', help='Enumerate partitions up to --limit')
    p.add_argument('--limit', type=positive_int, default=None)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser('sweep', parents=[common], help='Formula agreement grid for chessboard complexes')
    p.add_argument('--max-m', type=positive_int, default=6)
    p.add_argument('--max-n', type=positive_int, default=6)
    p.add_argument('--integral-limit', type=int, default=5, help='Use Z up to this size, Q/Z2/Z3 above')
    p.add_argument('--csv', type=Path, default=None)
    p.set_defaults(func=cmd_sweep)

    return parser


def strip_timing(report):
    """Report content without timing fields, for reproducibility comparisons."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k not in TIMING_FIELDS}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report


def emit(report, summary, args, print_fn=print):
    text = dump_report(report)
    if not args.json_only:
        print_fn(f"\n{'='*60}")
        print_fn(f"{args.command.upper()} - exit {report['exit_code']}")
        print_fn('='*60)
        print_report(summary, print_fn=print_fn)
        print_fn('')
    print_fn(text)
    if args.output:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        args.output.write_text(text + '\n', encoding='utf-8')


def main(argv: Optional[List[str]] = None, print_fn=print) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        load_env_overrides()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    manifest = RunManifest.from_args(args)
    start = time.perf_counter()
    try:
        if args.func is cmd_find:
            body, code, summary = cmd_find(args, manifest)
        else:
            body, code, summary = args.func(args)
    except (FaceBudgetExceeded, SearchTimeout) as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConfigurationParseError, HypothesisMismatch, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    report = {
        'manifest': manifest.to_dict(),
        'report': body,
        'exit_code': code,
        'elapsed': round(time.perf_counter() - start, 3),
    }
    emit(report, summary, args, print_fn=print_fn)
    return code


if __name__ == "__main__":
    sys.exit(main())
