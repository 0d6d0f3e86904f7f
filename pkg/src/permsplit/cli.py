"""Command-line front end: plan splittings, stream splitting sets, solve graph isomorphism, and
print the ratio and coverage tables.

Exit codes: 0 success (gi: isomorphism found), 1 gi proved non-isomorphic, 2 gi found nothing with
a randomized plan, 3 any error (including usage errors).
"""


from typing import List, NoReturn, Optional, Sequence, Tuple
from dataclasses import dataclass
import argparse
import json
import logging
import math
import sys

from termcolor import colored

from . import __version__
from .exceptions import InvalidArgumentError, PermsplitError
from .counting import factorial
from .permutation import formatPermutation
from .subgroup import chooseSubgroupParams, enumerateSubgroup
from .transversal import enumerateTransversal
from .splitting import (
    bidirectionalSplit, coverageLowerBound, empiricalMissRate, exactMissProbability, formatPlan,
    sizeRatio, subgroupSplit
)
from .solver import DEFAULT_THREADS
from .graph import graphIso, readGraph


logger = logging.getLogger(__name__)


EXIT_FOUND    = 0
EXIT_NONE     = 1
EXIT_EVIDENCE = 2
EXIT_ERROR    = 3

TABLE_MAX_N = 64


@dataclass(frozen=True)
class RunConfig:
    """The parsed command line"""
    command:     str
    n:           Optional[int]   = None
    targetLog:   Optional[float] = None
    kind:        str             = "subgroup"
    which:       str             = "transversal"
    limit:       Optional[int]   = None
    budget:      Optional[int]   = None
    budgetBytes: Optional[int]   = None
    seed:        Optional[int]   = None
    threads:     int             = DEFAULT_THREADS
    json:        bool            = False
    verbosity:   int             = 0
    paths:       Tuple[str, ...] = ()
    randomized:  bool            = False
    samples:     Optional[int]   = None
    trials:      int             = 1000


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors, which is taken by the gi verdicts"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, colored(f"{self.prog}: error: {message}\n", "red"))


def _positiveInt(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def buildParser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="permsplit", description="Splitting sets of S_n and a meet-in-the-middle group-action solver.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More log output on stderr (-v: info, -vv: debug).")
    parser.add_argument("--json", action="store_true", help="Print machine-readable JSON records.")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    plan = subparsers.add_parser("plan", help="Choose a splitting A·B = S_n and print its sizes.")
    plan.add_argument("--n", type=_positiveInt, required=True, help="Degree of the symmetric group.")
    plan.add_argument("--target-log", type=float, help="Natural log of the target subgroup size (default: log sqrt(n!)).")
    plan.add_argument("--kind", choices=("subgroup", "bidirectional"), default="subgroup")

    enum = subparsers.add_parser("enum", help="Stream the subgroup or its transversal, one permutation per line.")
    enum.add_argument("--n", type=_positiveInt, required=True)
    enum.add_argument("--target-log", type=float)
    enum.add_argument("--which", choices=("subgroup", "transversal"), default="transversal")
    enum.add_argument("--limit", type=_positiveInt, help="Stop after this many permutations.")

    gi = subparsers.add_parser("gi", help="Decide whether two graph files are isomorphic.")
    gi.add_argument("paths", nargs=2, metavar="GRAPH", help="Graph files: first line n, then one \"u v\" edge per line.")
    gi.add_argument("--budget", type=_positiveInt, help="Approximate number of table entries to store.")
    gi.add_argument("--budget-bytes", type=_positiveInt, help="Abort if the table would need more bytes than this.")
    gi.add_argument("--threads", type=_positiveInt, default=DEFAULT_THREADS)
    gi.add_argument("--randomized", action="store_true", help="Use random splitting sets (a negative answer is evidence only).")
    gi.add_argument("--samples", type=_positiveInt, help="Elements per random set (default: ceil(sqrt(2 n!))).")
    gi.add_argument("--seed", type=int, default=0)

    table = subparsers.add_parser("table", help="Print the best subgroup ratio to sqrt(n!) for n = 1..max.")
    table.add_argument("--n", "--max-n", dest="n", type=_positiveInt, default=30, help=f"Largest n (at most {TABLE_MAX_N}).")

    coverage = subparsers.add_parser("coverage", help="Measure how much of S_n random splitting sets miss.")
    coverage.add_argument("--n", type=_positiveInt, required=True)
    coverage.add_argument("--samples", type=_positiveInt, help="Elements per random set (default: round(sqrt(2 n!))).")
    coverage.add_argument("--trials", type=_positiveInt, default=1000)
    coverage.add_argument("--seed", type=int, default=0)
    return parser


def parseConfig(argv: Optional[Sequence[str]] = None) -> RunConfig:
    parser = buildParser()
    args = parser.parse_args(argv)
    if args.command == "plan" and args.kind == "bidirectional" and args.target_log is not None:
        parser.error("--target-log only applies to --kind subgroup")
    return RunConfig(
        command     = args.command,
        n           = getattr(args, "n", None),
        targetLog   = getattr(args, "target_log", None),
        kind        = getattr(args, "kind", "subgroup"),
        which       = getattr(args, "which", "transversal"),
        limit       = getattr(args, "limit", None),
        budget      = getattr(args, "budget", None),
        budgetBytes = getattr(args, "budget_bytes", None),
        seed        = getattr(args, "seed", None),
        threads     = getattr(args, "threads", DEFAULT_THREADS),
        json        = args.json,
        verbosity   = args.verbose,
        paths       = tuple(getattr(args, "paths", ())),
        randomized  = getattr(args, "randomized", False),
        samples     = getattr(args, "samples", None),
        trials      = getattr(args, "trials", 1000),
    )


# ==================================================================================================
# Subcommands
# ==================================================================================================


def cmdPlan(config: RunConfig) -> int:
    if config.kind == "bidirectional":
        plan = bidirectionalSplit(config.n)
    else:
        plan = subgroupSplit(config.n, targetLog=config.targetLog)
    print(json.dumps(plan.toDict()) if config.json else formatPlan(plan))
    return EXIT_FOUND


def cmdEnum(config: RunConfig) -> int:
    spec = chooseSubgroupParams(config.n, targetLog=config.targetLog)
    stream = enumerateSubgroup(spec) if config.which == "subgroup" else enumerateTransversal(spec)
    logger.info("Enumerating the %s of %s", config.which, spec)
    for count, g in enumerate(stream, start=1):
        print(json.dumps(list(g.oneLine())) if config.json else formatPermutation(g))
        if config.limit is not None and count >= config.limit:
            break
    return EXIT_FOUND


def cmdGi(config: RunConfig) -> int:
    first, second = (readGraph(path) for path in config.paths)
    samples = None
    if config.randomized:
        samples = config.samples or min(math.isqrt(2 * factorial(first.n) - 1) + 1, factorial(first.n))
    result = graphIso(
        first, second,
        budget=config.budget, samples=samples, seed=config.seed,
        threads=config.threads, memoryCapBytes=config.budgetBytes
    )
    if config.json:
        print(json.dumps(result.toDict(includeTiming=False)))
    elif result.found:
        print(formatPermutation(result.witness))
        print("VERIFIED")
    elif result.proof:
        print("non-isomorphic")
    else:
        print("unknown (randomized)")
    if result.found:
        print(colored(f"Isomorphism found after scanning {result.scannedCount} elements", "green"), file=sys.stderr)
        return EXIT_FOUND
    return EXIT_NONE if result.proof else EXIT_EVIDENCE


def ratioTable(maxN: int) -> List[Tuple[int, float, float]]:
    """Returns (n, best ratio, running average of the ratios) for n = 1..<maxN>"""
    rows = []
    total = 0.0
    for n in range(1, maxN + 1):
        spec = chooseSubgroupParams(n)
        ratio = sizeRatio(spec.order, n)
        total += ratio
        rows.append((n, ratio, total / n))
    return rows


def cmdTable(config: RunConfig) -> int:
    if config.n > TABLE_MAX_N:
        raise InvalidArgumentError(f"table supports n up to {TABLE_MAX_N}, got {config.n}")
    rows = ratioTable(config.n)
    if config.json:
        print(json.dumps([{"n": n, "ratio": ratio, "average": average} for n, ratio, average in rows]))
    else:
        print(f"{'n':>3}  {'ratio':>8}  {'average':>8}")
        for n, ratio, average in rows:
            print(f"{n:>3}  {ratio:8.4f}  {average:8.4f}")
    return EXIT_FOUND


def cmdCoverage(config: RunConfig) -> int:
    m = factorial(config.n)
    k = config.samples or max(1, round(math.sqrt(2 * m)))
    if k > m:
        raise InvalidArgumentError(f"Cannot draw {k} distinct elements from a group of order {m}")
    empirical = empiricalMissRate(config.n, k, config.trials, config.seed)
    record = {
        "n":            config.n,
        "samples":      k,
        "trials":       config.trials,
        "empiricalMiss": empirical,
        "exactMiss":    exactMissProbability(k, m),
        "boundMiss":    1 - coverageLowerBound(k, m),
    }
    if config.json:
        print(json.dumps(record))
    else:
        print(f"n={config.n} k={k} trials={config.trials}")
        print(f"empirical miss rate  {empirical:.6f}")
        print(f"exact miss rate      {record['exactMiss']:.6f}")
        print(f"e^(-k^2/m)           {record['boundMiss']:.6f}")
    return EXIT_FOUND


COMMANDS = {
    "plan":     cmdPlan,
    "enum":     cmdEnum,
    "gi":       cmdGi,
    "table":    cmdTable,
    "coverage": cmdCoverage,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    config = parseConfig(argv)
    logging.basicConfig(
        level=[logging.WARNING, logging.INFO, logging.DEBUG][min(config.verbosity, 2)],
        format="%(levelname)s: %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[config.command](config)
    except (PermsplitError, ValueError, OSError) as e:
        print(colored(f"permsplit {config.command}: {e}", "red"), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
