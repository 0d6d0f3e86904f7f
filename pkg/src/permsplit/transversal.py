"""Streams the lexicographically minimal left-coset representatives of H in S_n.

A permutation g (as a base image, i.e. its image vector) is the least element of gH exactly when

- the values 1..k appear in increasing order, and
- when l >= 2, the value k+1 appears before every value k+2..k+l.

The transversal is therefore built in three steps: an arrangement of the values k+2..k+l (behind
a leading k+1), an arrangement of the values k+l+1..n, and an interleaving of those two words
with the increasing word 1..k. The cursor walks all three with O(n) working state.
"""


from typing import List, Optional
import logging

from more_itertools import nth_permutation

from .exceptions import DegreeMismatchError, InvalidArgumentError
from .counting import ExactCount, binomial, factorial
from .permutation import Permutation, nextCombination, nextPermutation
from .subgroup import SubgroupSpec


logger = logging.getLogger(__name__)


def transversalIndex(spec: SubgroupSpec) -> ExactCount:
    """Returns |S_n : H| = (l-1)! (n-k-l)! C(k+l, l) C(n, n-k-l), which equals n!/|H|"""
    n, k, ell = spec.n, spec.k, spec.ell
    rest = n - k - ell
    return stepTwoCount(spec) * factorial(rest) * binomial(k + ell, ell) * binomial(n, rest)


def stepTwoCount(spec: SubgroupSpec) -> ExactCount:
    """The number of arrangements of k+2..k+l behind a leading k+1: (l-1)! (1 when l = 0)"""
    return factorial(spec.ell - 1) if spec.ell >= 2 else 1


def isCosetMinimal(g: Permutation, spec: SubgroupSpec) -> bool:
    """Whether <g> is the lexicographically least element of its left coset gH"""
    if g.degree != spec.n:
        raise DegreeMismatchError(f"Permutation of degree {g.degree} tested against {spec}")
    k, ell = spec.k, spec.ell
    position = g.inverted().images
    for value in range(1, k):
        if position[value - 1] > position[value]:
            return False
    if ell >= 2:
        lead = position[k]
        return all(lead < position[value] for value in range(k + 1, k + ell))
    return True


def isCosetMinimalByOrbits(g: Permutation, spec: SubgroupSpec) -> bool:
    """Tests coset minimality by walking the base positions and requiring each image to be the
    least point of its orbit under the pointwise stabilizer of the images fixed so far.

    Gives the same answer as isCosetMinimal(); kept as an independent check of it.
    """
    if g.degree != spec.n:
        raise DegreeMismatchError(f"Permutation of degree {g.degree} tested against {spec}")
    k, ell = spec.k, spec.ell
    nextSymmetric = 0  # least value of 1..k not yet placed (0-based)
    cycleBroken = False
    for value in g.images:
        if value < k:
            if value != nextSymmetric:
                return False
            nextSymmetric += 1
        elif value < k + ell:
            # Until one point of the cycle is placed, its whole support is a single orbit.
            if not cycleBroken and value != k:
                return False
            cycleBroken = True
    return True


# ==================================================================================================
# Streaming
# ==================================================================================================


class TransversalCursor:
    """Streams the |S_n : H| minimal coset representatives, identity first.

    Order: step-2 arrangement (lexicographic, outermost), then step-3 arrangement
    (lexicographic), then the positions of the values 1..k (lexicographic subsets), then the
    positions of the step-2 word among the remaining slots. All working buffers hold O(n)
    integers.

    A cursor can be restricted to the step-2 arrangements with indices in
    [<start>, <stop>), which is how the transversal is split into independent parts.
    """

    __slots__ = (
        "_spec", "_stepTwo", "_stepThree", "_symmetricPositions", "_cyclePositions",
        "_buffer", "_index", "_stop", "_done"
    )

    def __init__(self, spec: SubgroupSpec, start: int = 0, stop: Optional[int] = None):
        total = stepTwoCount(spec)
        stop = total if stop is None else min(stop, total)
        if not 0 <= start <= stop:
            raise InvalidArgumentError(f"Invalid step-2 range [{start}, {stop}) for {spec}")
        k, ell, n = spec.k, spec.ell, spec.n
        self._spec = spec
        if ell >= 2 and start > 0:
            tail = list(nth_permutation(range(k + 1, k + ell), ell - 1, start))
        else:
            tail = list(range(k + 1, k + ell))
        self._stepTwo: List[int] = [k] + tail if ell >= 2 else []
        self._stepThree: List[int] = list(range(k + ell, n))
        self._symmetricPositions: List[int] = list(range(k))
        self._cyclePositions: List[int] = list(range(ell))
        self._buffer: List[int] = list(range(n))
        self._index = start
        self._stop = stop
        self._done = start >= stop

    @property
    def spec(self) -> SubgroupSpec:
        """The subgroup whose cosets are being represented"""
        return self._spec

    def stateSize(self) -> int:
        """The number of integers held by the cursor's working buffers"""
        return (
            len(self._stepTwo) + len(self._stepThree) + len(self._symmetricPositions)
            + len(self._cyclePositions) + len(self._buffer) + 2
        )

    def __iter__(self) -> "TransversalCursor":
        return self

    def _fill(self):
        buffer = self._buffer
        symmetric, cycle = self._symmetricPositions, self._cyclePositions
        stepTwo, stepThree = self._stepTwo, self._stepThree
        s = c = t = 0
        free = 0
        for position in range(self._spec.n):
            if s < len(symmetric) and symmetric[s] == position:
                buffer[position] = s
                s += 1
                continue
            if c < len(cycle) and cycle[c] == free:
                buffer[position] = stepTwo[c]
                c += 1
            else:
                buffer[position] = stepThree[t]
                t += 1
            free += 1

    def _advance(self):
        n, k = self._spec.n, self._spec.k
        if nextCombination(self._cyclePositions, n - k):
            return
        if nextCombination(self._symmetricPositions, n):
            return
        if nextPermutation(self._stepThree):
            return
        self._index += 1
        if self._index >= self._stop:
            self._done = True
            return
        # The leading k+1 stays in front; only the tail is permuted.
        tail = self._stepTwo[1:]
        nextPermutation(tail)
        self._stepTwo[1:] = tail

    def __next__(self) -> Permutation:
        if self._done:
            raise StopIteration
        self._fill()
        representative = Permutation(self._buffer, check=False)
        self._advance()
        return representative


def enumerateTransversal(spec: SubgroupSpec) -> TransversalCursor:
    """Returns a cursor over the whole transversal of H"""
    return TransversalCursor(spec)


def partitionTransversal(spec: SubgroupSpec, parts: int) -> List[TransversalCursor]:
    """Splits the transversal into at most <parts> disjoint cursors by step-2 arrangement.\n
    Concatenating the cursors in order gives the same stream as enumerateTransversal()."""
    if parts < 1:
        raise InvalidArgumentError(f"Need at least one part, got {parts}")
    total = stepTwoCount(spec)
    parts = min(parts, total)
    bounds = [total * i // parts for i in range(parts + 1)]
    logger.debug("Partitioning the transversal of %s into %i parts", spec, parts)
    return [TransversalCursor(spec, bounds[i], bounds[i + 1]) for i in range(parts)]
