"""Provides SubgroupSpec, the subgroups H = <S_k, (k+1 k+2 ... k+l)> of S_n, and a streaming
enumerator of their elements.

Every such H has order k! when l is 0 or 1 and order l * k! when l >= 2. Taking all admissible
(k, l) gives subgroup orders spread roughly geometrically between 1 and n!, so one of them lies
within a small constant factor of any target size.
"""


from typing import Iterable, Iterator, List, Optional, Set, Tuple
from dataclasses import dataclass, field
from fractions import Fraction
import logging
import math

from .exceptions import (
    CollectionLimitError, InvalidArgumentError, InvalidDegreeError, InvalidSubgroupError, InvalidTargetError
)
from .counting import ExactCount, LogMagnitude, factorial, logFactorial
from .permutation import Permutation, nextPermutation


logger = logging.getLogger(__name__)


# Relative tolerance under which two log-space distances count as a tie.
LOG_TIE_TOLERANCE = 1e-12


# ==================================================================================================
# SubgroupSpec
# ==================================================================================================


@dataclass(frozen=True)
class SubgroupSpec:
    """The subgroup H of S_n generated by S_k (on points 1..k) and the l-cycle
    sigma = (k+1 k+2 ... k+l).

    The spec is stored in canonical form: l = 1 is normalized to l = 0 (both give S_k), and the
    trivial group is always (k, l) = (1, 0).
    """

    n:     int
    k:     int
    ell:   int
    order: ExactCount = field(init=False, compare=False)

    def __post_init__(self):
        n, k, ell = self.n, self.k, self.ell
        if n < 1:
            raise InvalidDegreeError(f"Invalid degree {n}: the degree must be at least 1")
        if not 0 <= k <= n or not 0 <= ell <= n - k:
            raise InvalidSubgroupError(f"Need 0 <= k <= n and 0 <= l <= n-k, got n={n}, k={k}, l={ell}")
        if k + ell < 1:
            raise InvalidSubgroupError("Need k + l >= 1")
        if ell == 1:
            ell = 0
        if k == 0 and ell == 0:
            k = 1
        # The dataclass is frozen; canonicalization has to bypass __setattr__.
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "order", factorial(k) * max(ell, 1))

    @property
    def moved(self) -> int:
        """The number of points H may move (k + l); points above k + l are fixed"""
        return self.k + self.ell

    def __str__(self):
        return f"H(n={self.n}, k={self.k}, l={self.ell}, |H|={self.order})"


def subgroupGenerators(spec: SubgroupSpec) -> List[Permutation]:
    """Returns the generators of H, case by case:

    - k >= 2 and l >= 2: (1 2), (1 2 ... k), (k+1 ... k+l)
    - k >= 2 and l = 0:  (1 2), (1 2 ... k)
    - k = 1:             (2 3 ... l+1)
    - k = 0:             (1 2 ... l)

    Duplicates (k = 2 makes (1 2) and (1 2 ... k) equal) and identities are left out, so the
    trivial group has no generators.
    """
    n, k, ell = spec.n, spec.k, spec.ell
    candidates: List[Permutation] = []
    if k >= 2:
        candidates.append(Permutation.cycle(n, [1, 2]))
        candidates.append(Permutation.cycle(n, list(range(1, k + 1))))
    if ell >= 2:
        candidates.append(Permutation.cycle(n, list(range(k + 1, k + ell + 1))))
    generators: List[Permutation] = []
    for g in candidates:
        if not g.isIdentity() and g not in generators:
            generators.append(g)
    return generators


# ==================================================================================================
# Choosing (k, l)
# ==================================================================================================


def _candidateSpecs(n: int) -> Iterator[Tuple[int, int, ExactCount]]:
    """Yields (k, l, order) for every canonical admissible pair, in O(n^2) steps"""
    kFactorial = 1
    for k in range(n + 1):
        if k > 0:
            kFactorial *= k
        if k >= 1:
            yield k, 0, kFactorial
        for ell in range(2, n - k + 1):
            yield k, ell, kFactorial * ell


def chooseSubgroupParams(
    n:           int,
    targetLog:   Optional[LogMagnitude] = None,
    exactTarget: Optional[int]          = None
) -> SubgroupSpec:
    """Returns the SubgroupSpec whose order is closest to the target in log distance.

    The target is sqrt(n!) unless <targetLog> (a natural logarithm) or <exactTarget> (an
    integer size) is given. For sqrt(n!) and integer targets the comparison is done with exact
    rational arithmetic; a log-space target is compared in floating point.

    Ties are broken towards the smaller order, then towards the larger k. For n >= 7 and the
    default target, the returned order lies within a factor sqrt(2) of sqrt(n!).
    """
    if n < 1:
        raise InvalidDegreeError(f"Invalid degree {n}: the degree must be at least 1")
    if targetLog is not None and exactTarget is not None:
        raise InvalidArgumentError("Pass at most one of <targetLog> and <exactTarget>")

    targetSquared: Optional[int] = None
    if exactTarget is not None:
        if not 1 <= exactTarget <= factorial(n):
            raise InvalidTargetError(f"Target size {exactTarget} is outside [1, {n}!]")
        targetSquared = exactTarget * exactTarget
    elif targetLog is None:
        targetSquared = factorial(n)
    elif not -LOG_TIE_TOLERANCE <= targetLog <= logFactorial(n) + LOG_TIE_TOLERANCE:
        raise InvalidTargetError(f"Target log-size {targetLog} is outside [0, log {n}!]")

    best: Optional[Tuple[int, int, ExactCount]] = None
    if targetSquared is not None:
        bestDistance: Optional[Fraction] = None
        for k, ell, order in _candidateSpecs(n):
            squared = order * order
            distance = Fraction(max(squared, targetSquared), min(squared, targetSquared))
            if (
                bestDistance is None or distance < bestDistance
                or (distance == bestDistance and (order, -k) < (best[2], -best[0]))
            ):
                best, bestDistance = (k, ell, order), distance
    else:
        bestLogDistance = math.inf
        for k, ell, order in _candidateSpecs(n):
            distance = abs(math.log(order) - targetLog)
            tied = abs(distance - bestLogDistance) <= LOG_TIE_TOLERANCE * max(1.0, abs(targetLog))
            if (
                (distance < bestLogDistance and not tied)
                or (tied and (order, -k) < (best[2], -best[0]))
            ):
                best, bestLogDistance = (k, ell, order), distance

    spec = SubgroupSpec(n, best[0], best[1])
    logger.debug("chooseSubgroupParams(%i) chose %s", n, spec)
    return spec


# ==================================================================================================
# Enumeration
# ==================================================================================================


class SubgroupCursor:
    """Streams the elements of H in a fixed canonical order: the elements of S_k in
    lexicographic order, each composed with sigma^0, sigma^1, ..., sigma^(l-1).

    The working state is one arrangement of k points and one output buffer of n points. The
    cursor is a single-consumer iterator; do not share it between threads.
    """

    __slots__ = ("_spec", "_arrangement", "_power", "_buffer", "_done")

    def __init__(self, spec: SubgroupSpec):
        self._spec = spec
        self._arrangement: List[int] = list(range(spec.k))
        self._power = 0
        self._buffer: List[int] = list(range(spec.n))
        self._done = False

    @property
    def spec(self) -> SubgroupSpec:
        """The subgroup being enumerated"""
        return self._spec

    def stateSize(self) -> int:
        """The number of integers held by the cursor's working buffers"""
        return len(self._arrangement) + len(self._buffer) + 1

    def __iter__(self) -> "SubgroupCursor":
        return self

    def __next__(self) -> Permutation:
        if self._done:
            raise StopIteration
        k, ell = self._spec.k, self._spec.ell
        buffer = self._buffer
        buffer[:k] = self._arrangement
        for i in range(ell):
            buffer[k + i] = k + (i + self._power) % ell
        element = Permutation(buffer, check=False)

        self._power += 1
        if self._power >= max(ell, 1):
            self._power = 0
            if not nextPermutation(self._arrangement):
                self._done = True
        return element


def enumerateSubgroup(spec: SubgroupSpec) -> SubgroupCursor:
    """Returns a cursor over the |H| elements of H (identity first)"""
    return SubgroupCursor(spec)


def closeSubgroup(generators: Iterable[Permutation], degree: int) -> Set[Permutation]:
    """Returns the subgroup of S_<degree> generated by <generators>, by breadth-first closure.\n
    This materializes the whole group; it is meant for small degrees and cross-checks."""
    generatorList = list(generators)
    start = Permutation(range(degree), check=False)
    elements = {start}
    frontier = [start]
    while frontier:
        nextFrontier = []
        for element in frontier:
            for generator in generatorList:
                product = element.compose(generator)
                if product not in elements:
                    elements.add(product)
                    nextFrontier.append(product)
        frontier = nextFrontier
    return elements


# Largest degree for which collect() will materialize a stream.
COLLECT_LIMIT = 10


def collect(stream: Iterable[Permutation], degree: int) -> List[Permutation]:
    """Materializes <stream> into a list.\n
    Refuses degrees above COLLECT_LIMIT, where streams are meant to be consumed lazily."""
    if degree > COLLECT_LIMIT:
        raise CollectionLimitError(
            f"Refusing to collect a stream of degree {degree} (limit {COLLECT_LIMIT})"
        )
    return list(stream)
