"""Provides the meet-in-the-middle solver for the group-action discrete logarithm: given states
r and s, find g in S_n with r^g = s.

With a split plan A·B = S_n, r^(ab) = s holds exactly when r^a = s^(b^-1). The solver stores one
of the two sets {r^a : a in A} and {s^(b^-1) : b in B} in a hash table and streams the other
against it. Only the stored side is ever held in memory.
"""


from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Tuple
from dataclasses import dataclass
from concurrent import futures
import logging
import math
import sys
import time

from more_itertools import chunked, peekable

from .exceptions import DegreeMismatchError, InvalidArgumentError, InvalidTargetError, MemoryBudgetExceededError
from .counting import ExactCount, factorial
from .permutation import Permutation
from .action import GroupAction
from .splitting import SplitKind, SplitPlan, subgroupSplit


logger = logging.getLogger(__name__)


DEFAULT_THREADS = 1
DEFAULT_MEMORY_CAP_BYTES: Optional[int] = None

# Number of stream elements handed to a worker thread at a time.
CHUNK_SIZE = 4096

# Rough per-entry overhead of a dict slot (hash, key pointer, value pointer, spare capacity).
_DICT_ENTRY_BYTES = 3 * 8 * 3 // 2


# ==================================================================================================
# CollisionTable
# ==================================================================================================


class CollisionTable:
    """Maps encoded states to the group element that produced them.

    The first element inserted under a key is kept; later inserts under the same key are ignored.
    """

    def __init__(self):
        self._entries: Dict[Hashable, Permutation] = {}

    def insert(self, key: Hashable, element: Permutation) -> bool:
        """Stores <element> under <key> unless the key is already present.\n
        Returns whether the element was stored."""
        if key in self._entries:
            return False
        self._entries[key] = element
        return True

    def lookup(self, key: Hashable) -> Optional[Permutation]:
        """Returns the element stored under <key>, or None"""
        return self._entries.get(key)

    def merge(self, other: "CollisionTable"):
        """Inserts every entry of <other>, in its insertion order"""
        for key, element in other._entries.items():
            self.insert(key, element)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._entries

    @staticmethod
    def estimateBytes(entryCount: ExactCount, sampleKey: Hashable, sampleElement: Permutation) -> int:
        """Estimates the memory used by a table of <entryCount> entries shaped like the sample"""
        perEntry = (
            sys.getsizeof(sampleKey) + sys.getsizeof(sampleElement)
            + sys.getsizeof(sampleElement.images) + _DICT_ENTRY_BYTES
        )
        return entryCount * perEntry


# ==================================================================================================
# SolveResult
# ==================================================================================================


@dataclass(frozen=True)
class SolveResult:
    """The outcome of a solver run.

    If <witness> is None and <proof> is True, no g in S_n maps r to s. If <witness> is None and
    <proof> is False (randomized plans), the search only gives evidence that none exists.
    """

    witness:      Optional[Permutation]
    proof:        bool
    storedSide:   str
    storedCount:  int
    scannedCount: int
    wallTime:     float
    planKind:     SplitKind

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def verdict(self) -> str:
        """One of "found", "none" (proved) and "unknown" (evidence only)"""
        if self.found:
            return "found"
        return "none" if self.proof else "unknown"

    def toDict(self, includeTiming: bool = True) -> Dict[str, Any]:
        """Returns a JSON-serializable record of the result.\n
        With <includeTiming>=False the wall time is left out, making the record reproducible."""
        record: Dict[str, Any] = {
            "verdict":      self.verdict,
            "witness":      None if self.witness is None else list(self.witness.oneLine()),
            "proof":        self.proof,
            "storedSide":   self.storedSide,
            "storedCount":  self.storedCount,
            "scannedCount": self.scannedCount,
            "planKind":     self.planKind.value,
        }
        if includeTiming:
            record["wallTime"] = self.wallTime
        return record


# ==================================================================================================
# Solving
# ==================================================================================================


def verify(action: GroupAction, r: Any, s: Any, g: Permutation) -> bool:
    """Whether <g> maps <r> to <s> under <action>"""
    if g.degree != action.degree:
        raise DegreeMismatchError(f"Permutation of degree {g.degree} used with an action of degree {action.degree}")
    return action.encode(action.apply(g, r)) == action.encode(s)


def _buildTable(
    elements: Iterable[Permutation],
    key:      Callable[[Permutation], Hashable],
    executor: Optional[futures.Executor]
) -> CollisionTable:
    def buildPart(chunk: List[Permutation]) -> CollisionTable:
        part = CollisionTable()
        for element in chunk:
            part.insert(key(element), element)
        return part

    if executor is None:
        return buildPart(elements)
    table = CollisionTable()
    # map() yields the parts in submission order, so the merge keeps the sequential first writer.
    for part in executor.map(buildPart, chunked(elements, CHUNK_SIZE)):
        table.merge(part)
    return table


def _scan(
    elements: Iterator[Permutation],
    probe:    Callable[[Permutation], Optional[Permutation]],
    executor: Optional[futures.Executor],
    workers:  int
) -> Tuple[Optional[Permutation], int]:
    """Returns the first witness in stream order (or None) and the number of elements scanned up
    to and including it."""
    def scanPart(chunk: List[Permutation]) -> Tuple[Optional[Permutation], int]:
        for i, element in enumerate(chunk):
            witness = probe(element)
            if witness is not None:
                return witness, i + 1
        return None, len(chunk)

    if executor is None:
        scanned = 0
        for element in elements:
            scanned += 1
            witness = probe(element)
            if witness is not None:
                return witness, scanned
        return None, scanned

    scanned = 0
    chunks = chunked(elements, CHUNK_SIZE)
    while True:
        wave = [chunk for _, chunk in zip(range(workers), chunks)]
        if not wave:
            return None, scanned
        for witness, count in executor.map(scanPart, wave):
            scanned += count
            if witness is not None:
                return witness, scanned


def solve(
    action:         GroupAction,
    r:              Any,
    s:              Any,
    plan:           SplitPlan,
    storedSide:     Optional[str] = None,
    threads:        int           = DEFAULT_THREADS,
    memoryCapBytes: Optional[int] = DEFAULT_MEMORY_CAP_BYTES
) -> SolveResult:
    """Searches for g = compose(a, b) with a in A, b in B and r^g = s.

    The smaller of A and B is stored (B on ties) unless <storedSide> ("A" or "B") forces a side.
    The first witness in the canonical order of the scanned stream is returned, so runs are
    reproducible for any number of <threads>.

    If <memoryCapBytes> is set and the estimated table size exceeds it, raises
    MemoryBudgetExceededError before anything is stored.
    """
    if plan.n != action.degree:
        raise DegreeMismatchError(f"Plan of degree {plan.n} used with an action of degree {action.degree}")
    if storedSide is None:
        storedSide = "A" if plan.sizeA < plan.sizeB else "B"
    if storedSide not in ("A", "B"):
        raise InvalidArgumentError(f'storedSide must be "A" or "B", got {storedSide!r}')
    if threads < 1:
        raise InvalidArgumentError(f"Need at least one thread, got {threads}")

    def keyA(a: Permutation) -> Hashable:
        return action.encode(action.apply(a, r))

    def keyB(b: Permutation) -> Hashable:
        return action.encode(action.apply(b.inverted(), s))

    if storedSide == "A":
        stored, storedSize, storeKey = peekable(plan.streamA()), plan.sizeA, keyA
        scanned, scanKey = plan.streamB(), keyB
        def combine(hit: Permutation, element: Permutation) -> Permutation:
            return hit.compose(element)
    else:
        stored, storedSize, storeKey = peekable(plan.streamB()), plan.sizeB, keyB
        scanned, scanKey = plan.streamA(), keyA
        def combine(hit: Permutation, element: Permutation) -> Permutation:
            return element.compose(hit)

    if memoryCapBytes is not None:
        sample = stored.peek()
        estimate = CollisionTable.estimateBytes(storedSize, storeKey(sample), sample)
        if estimate > memoryCapBytes:
            raise MemoryBudgetExceededError(
                f"Storing {storedSize} entries needs about {estimate} bytes, over the cap of {memoryCapBytes}"
            )

    def probe(element: Permutation) -> Optional[Permutation]:
        hit = table.lookup(scanKey(element))
        if hit is None:
            return None
        witness = combine(hit, element)
        return witness if verify(action, r, s, witness) else None

    start = time.perf_counter()
    executor = futures.ThreadPoolExecutor(threads) if threads > 1 else None
    if executor is not None:
        logger.warning(
            "Solving with more than one worker thread.\n"
            "Table building and scanning are split into chunks of %i elements. Results are the\n"
            "same as for a single thread, but pure-Python actions gain little from threads.",
            CHUNK_SIZE
        )
    try:
        table = _buildTable(stored, storeKey, executor)
        logger.debug("Stored %i entries from side %s", len(table), storedSide)
        witness, scannedCount = _scan(scanned, probe, executor, threads)
    finally:
        if executor is not None:
            executor.shutdown(wait=True)
    wallTime = time.perf_counter() - start

    result = SolveResult(
        witness, plan.isDeterministic, storedSide, len(table), scannedCount, wallTime, plan.kind
    )
    logger.info(
        "Solver %s: stored %i (side %s), scanned %i, %.3f s",
        result.verdict, result.storedCount, storedSide, scannedCount, wallTime
    )
    if not result.found and not plan.isDeterministic:
        logger.warning(
            "No witness found with a randomized plan.\n"
            "This is evidence, not proof, that r and s lie in different orbits."
        )
    return result


def solveTradeoff(
    action:         GroupAction,
    r:              Any,
    s:              Any,
    budget:         int,
    threads:        int           = DEFAULT_THREADS,
    memoryCapBytes: Optional[int] = DEFAULT_MEMORY_CAP_BYTES
) -> SolveResult:
    """Solves with about <budget> table entries and about n!/<budget> scanned elements.

    The subgroup H closest to <budget> is stored and its transversal is scanned. Budgets above
    sqrt(n!) are accepted, but then the stored side is the larger one.
    """
    n = action.degree
    if not 1 <= budget <= factorial(n):
        raise InvalidTargetError(f"Budget {budget} is outside [1, {n}!]")
    if budget * budget > factorial(n):
        logger.warning("Budget %i exceeds sqrt(%i!); the stored side will be the larger one.", budget, n)
    plan = subgroupSplit(n, exactTarget=budget)
    logger.debug("Tradeoff budget %i: storing |H| = %i, scanning %i (log ratio %.3f)",
                 budget, plan.sizeB, plan.sizeA, math.log(plan.sizeB / budget))
    return solve(action, r, s, plan, storedSide="B", threads=threads, memoryCapBytes=memoryCapBytes)
