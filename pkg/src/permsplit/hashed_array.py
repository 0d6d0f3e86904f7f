"""The hashed-array puzzle: two arrays hold the same n distinct objects in different orders, and
the only thing that can be learned about an array is an integer hash of its arrangement. Find the
permutation that moves the objects of the first array into the order of the second.

The hash is a keyed injection from the n! arrangements to 1..n!. Its values reveal nothing
about the arrangement beyond equality, so the solver can only match hashes.
"""


from typing import Optional, Tuple
import logging
import math

import numpy as np
from more_itertools import permutation_index

from .exceptions import DegreeMismatchError, InvalidArgumentError, InvalidDegreeError
from .counting import factorial
from .permutation import Permutation
from .solver import DEFAULT_MEMORY_CAP_BYTES, DEFAULT_THREADS, SolveResult, solve, solveTradeoff
from .splitting import subgroupSplit


logger = logging.getLogger(__name__)


class HashedArrayOracle:
    """A keyed hash of arrangements of the objects 0..n-1.

    The objects are first renamed by a hidden permutation, the renamed arrangement is ranked
    among all n! arrangements, and the rank is scrambled by an affine bijection of Z_(n!). All
    three steps are bijective, so distinct arrangements never share a hash.
    """

    def __init__(self, n: int, key: int):
        if n < 1:
            raise InvalidDegreeError(f"Invalid array length {n}: must be at least 1")
        self._n = n
        self._modulus = factorial(n)
        rng = np.random.default_rng(key)
        self._renaming = tuple(int(x) for x in rng.permutation(n))
        multiplier = int(rng.integers(1, 2**62)) % self._modulus or 1
        while math.gcd(multiplier, self._modulus) != 1:
            multiplier += 1
        self._multiplier = multiplier
        self._offset = int(rng.integers(0, 2**62)) % self._modulus

    @property
    def n(self) -> int:
        return self._n

    def hash(self, arrangement: Tuple[int, ...]) -> int:
        """Returns the positive integer hash of <arrangement>"""
        renamed = tuple(self._renaming[obj] for obj in arrangement)
        rank = permutation_index(renamed, range(self._n))
        return 1 + (self._multiplier * rank + self._offset) % self._modulus


class HashedArray:
    """An opaque array of n distinct objects. Only its oracle hash is observable."""

    __slots__ = ("_oracle", "_arrangement")

    def __init__(self, oracle: HashedArrayOracle, arrangement: Tuple[int, ...]):
        self._oracle = oracle
        self._arrangement = arrangement

    @property
    def oracle(self) -> HashedArrayOracle:
        return self._oracle

    @property
    def n(self) -> int:
        return self._oracle.n

    def hash(self) -> int:
        return self._oracle.hash(self._arrangement)

    def moved(self, g: Permutation) -> "HashedArray":
        """Returns the array with the object at position i moved to position g(i)"""
        arrangement = [0] * len(self._arrangement)
        for i, target in enumerate(g.images):
            arrangement[target] = self._arrangement[i]
        return HashedArray(self._oracle, tuple(arrangement))


class HashedArrayAction:
    """S_n acting on hashed arrays by moving objects; states are encoded by their hash only"""

    def __init__(self, oracle: HashedArrayOracle):
        self._oracle = oracle

    @property
    def degree(self) -> int:
        return self._oracle.n

    def apply(self, g: Permutation, state: HashedArray) -> HashedArray:
        if g.degree != self._oracle.n:
            raise DegreeMismatchError(f"Cannot move an array of length {self._oracle.n} by a permutation of degree {g.degree}")
        return state.moved(g)

    def encode(self, state: HashedArray) -> int:
        return state.hash()


def hashedArrayAction(oracle: HashedArrayOracle) -> HashedArrayAction:
    return HashedArrayAction(oracle)


def hashedArrayPuzzle(n: int, hidden: Permutation, key: int) -> Tuple[HashedArray, HashedArray]:
    """Returns a puzzle instance: an array of <n> objects and the same array moved by <hidden>,
    both hashed by the oracle keyed with <key>."""
    if hidden.degree != n:
        raise DegreeMismatchError(f"Hidden permutation of degree {hidden.degree} for arrays of length {n}")
    oracle = HashedArrayOracle(n, key)
    first = HashedArray(oracle, tuple(range(n)))
    return first, first.moved(hidden)


def hashedArraySolve(
    first:          HashedArray,
    second:         HashedArray,
    budget:         Optional[int] = None,
    threads:        int           = DEFAULT_THREADS,
    memoryCapBytes: Optional[int] = DEFAULT_MEMORY_CAP_BYTES
) -> SolveResult:
    """Finds g moving the objects of <first> into the order of <second>, using only hashes.\n
    Both arrays must share one oracle. <budget> sets the stored table size as in solveTradeoff();
    by default the subgroup plan closest to sqrt(n!) is used."""
    if first.oracle is not second.oracle:
        raise InvalidArgumentError("Both arrays must be hashed by the same oracle")
    action = hashedArrayAction(first.oracle)
    logger.debug("Hashed-array puzzle of length %i, budget %s", first.n, budget)
    if budget is not None:
        return solveTradeoff(action, first, second, budget, threads=threads, memoryCapBytes=memoryCapBytes)
    plan = subgroupSplit(first.n)
    return solve(action, first, second, plan, threads=threads, memoryCapBytes=memoryCapBytes)
