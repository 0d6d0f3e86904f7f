"""Splitting sets A, B of S_n with A·B = S_n.

Three families are provided:

- subgroup_transversal: B is a subgroup H and A its transversal of minimal coset
  representatives. Every g factors uniquely as compose(a, b), and max(|A|, |B|) is within a
  small constant factor of sqrt(n!).
- bidirectional: B fixes the points 1..k and A is given by the injective k-prefixes. Also
  exact, but max(|A|, |B|) carries an extra factor of order sqrt(n).
- randomized: A and B are seeded random samples. A fixed g lies in A·B only with high
  probability.
"""


from typing import Any, Dict, Iterator, Optional, Set, Tuple
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
import logging
import math

import numpy as np

from .exceptions import InvalidArgumentError, InvalidDegreeError, InvalidTargetError, SampleSizeError
from .counting import ExactCount, LogMagnitude, factorial, fallingFactorial, logFactorial, solveHalfFactorial
from .permutation import Permutation, lexStream, randomPermutation
from .subgroup import SubgroupSpec, chooseSubgroupParams, enumerateSubgroup
from .transversal import enumerateTransversal, transversalIndex


logger = logging.getLogger(__name__)


class SplitKind(Enum):
    """The family a SplitPlan belongs to"""
    SUBGROUP_TRANSVERSAL = "subgroup_transversal"
    BIDIRECTIONAL        = "bidirectional"
    RANDOMIZED           = "randomized"


# ==================================================================================================
# SplitPlan
# ==================================================================================================


@dataclass(frozen=True)
class SplitPlan:
    """A factorization A·B of S_n with exact set sizes.

    Only the parameters of the chosen family are set: <subgroup> for subgroup_transversal,
    <splitPoint> for bidirectional, <sampleCount> and <seed> for randomized. Randomized plans also
    carry their sampled sets; the deterministic families stream theirs on demand.
    """

    kind:        SplitKind
    n:           int
    sizeA:       ExactCount
    sizeB:       ExactCount
    subgroup:    Optional[SubgroupSpec] = None
    splitPoint:  Optional[int]          = None
    sampleCount: Optional[int]          = None
    seed:        Optional[int]          = None
    sampleA:     Tuple[Permutation, ...] = field(default=(), repr=False, compare=False)
    sampleB:     Tuple[Permutation, ...] = field(default=(), repr=False, compare=False)

    @property
    def isDeterministic(self) -> bool:
        """Whether A·B is guaranteed to cover S_n"""
        return self.kind is not SplitKind.RANDOMIZED

    def streamA(self) -> Iterator[Permutation]:
        """Returns a fresh single-consumer stream over A"""
        if self.kind is SplitKind.SUBGROUP_TRANSVERSAL:
            return enumerateTransversal(self.subgroup)
        if self.kind is SplitKind.BIDIRECTIONAL:
            return (c.inverted() for c in prefixStream(self.n, self.splitPoint))
        return iter(self.sampleA)

    def streamB(self) -> Iterator[Permutation]:
        """Returns a fresh single-consumer stream over B"""
        if self.kind is SplitKind.SUBGROUP_TRANSVERSAL:
            return enumerateSubgroup(self.subgroup)
        if self.kind is SplitKind.BIDIRECTIONAL:
            return suffixStream(self.n, self.splitPoint)
        return iter(self.sampleB)

    @property
    def ratio(self) -> float:
        """max(|A|, |B|) / sqrt(n!)"""
        return math.exp(math.log(max(self.sizeA, self.sizeB)) - logFactorial(self.n) / 2)

    def toDict(self) -> Dict[str, Any]:
        """Returns a JSON-serializable description of the plan"""
        record: Dict[str, Any] = {
            "n":     self.n,
            "kind":  self.kind.value,
            "sizeA": self.sizeA,
            "sizeB": self.sizeB,
            "ratio": self.ratio,
        }
        if self.subgroup is not None:
            record.update(k=self.subgroup.k, l=self.subgroup.ell, order=self.subgroup.order, index=self.sizeA)
        if self.splitPoint is not None:
            record["splitPoint"] = self.splitPoint
        if self.sampleCount is not None:
            record.update(sampleCount=self.sampleCount, seed=self.seed)
        return record


def formatPlan(plan: SplitPlan) -> str:
    """Renders <plan> as one line of text, with the ratio to 6 significant digits"""
    parts = [f"n={plan.n}", f"kind={plan.kind.value}"]
    if plan.subgroup is not None:
        spec = plan.subgroup
        parts += [f"k={spec.k}", f"l={spec.ell}", f"|H|={spec.order}", f"index={plan.sizeA}"]
    if plan.splitPoint is not None:
        parts.append(f"k={plan.splitPoint}")
    if plan.sampleCount is not None:
        parts += [f"samples={plan.sampleCount}", f"seed={plan.seed}"]
    parts += [f"|A|={plan.sizeA}", f"|B|={plan.sizeB}", f"ratio={plan.ratio:.6g}"]
    return " ".join(parts)


# ==================================================================================================
# Deterministic plans
# ==================================================================================================


def subgroupSplit(
    n:           int,
    targetLog:   Optional[LogMagnitude] = None,
    exactTarget: Optional[int]          = None
) -> SplitPlan:
    """Returns the perfect plan A = transversal of H, B = H, with H chosen by
    chooseSubgroupParams(<n>, <targetLog>, <exactTarget>)."""
    spec = chooseSubgroupParams(n, targetLog=targetLog, exactTarget=exactTarget)
    if n < 7 and targetLog is None and exactTarget is None:
        logger.warning(
            "For n = %i < 7 the chosen subgroup is the best available, but it is not\n"
            "guaranteed to lie within a factor sqrt(2) of sqrt(n!).", n
        )
    plan = SplitPlan(SplitKind.SUBGROUP_TRANSVERSAL, n, transversalIndex(spec), spec.order, subgroup=spec)
    logger.debug("Built plan %s", formatPlan(plan))
    return plan


def prefixStream(n: int, k: int) -> Iterator[Permutation]:
    """Yields the (n)_k permutations whose first k images are an injective k-prefix (in
    lexicographic order) and whose remaining images are the unused points in increasing order."""
    for prefix in permutations(range(n), k):
        used = set(prefix)
        yield Permutation(prefix + tuple(p for p in range(n) if p not in used), check=False)


def suffixStream(n: int, k: int) -> Iterator[Permutation]:
    """Yields the (n-k)! permutations that fix 1..k, in lexicographic order"""
    head = tuple(range(k))
    for suffix in lexStream(range(k, n)):
        yield Permutation(head + suffix, check=False)


def bidirectionalSplit(n: int) -> SplitPlan:
    """Returns the bidirectional plan: B = the permutations fixing 1..k ((n-k)! of them) and
    A = the inverses of prefixStream(n, k) ((n)_k of them).

    k is chosen so that n - k is the integer closest to the real x with x! = sqrt(n!), kept
    within 1 <= k <= n - 1.
    """
    if n < 2:
        raise InvalidDegreeError(f"A bidirectional split needs n >= 2, got {n}")
    x = solveHalfFactorial(n)
    k = min(max(n - round(x), 1), n - 1)
    plan = SplitPlan(SplitKind.BIDIRECTIONAL, n, fallingFactorial(n, k), factorial(n - k), splitPoint=k)
    logger.debug("Built plan %s (x = %.6f)", formatPlan(plan), x)
    return plan


def halfSplitOverhead(n: int) -> float:
    """Returns (n)_{n/2} / sqrt(n!), the excess of splitting S_n exactly in half by prefixes"""
    return math.exp(math.log(fallingFactorial(n, n // 2)) - logFactorial(n) / 2)


def sizeRatio(size: ExactCount, n: int) -> float:
    """Returns the symmetric ratio max(size, sqrt(n!)) / min(size, sqrt(n!)) >= 1"""
    return math.exp(abs(math.log(size) - logFactorial(n) / 2))


def subgroupSizeBound(n: int, m: int) -> float:
    """Returns the guaranteed factor max(sqrt(2), sqrt((x+1)/(n-x))), where x! <= m < (x+1)!,
    within which some subgroup H of S_n has order close to <m>."""
    if not 1 <= m < factorial(n):
        raise InvalidTargetError(f"Target size {m} is outside [1, {n}!)")
    x, xFactorial = 1, 1
    while xFactorial * (x + 1) <= m:
        x += 1
        xFactorial *= x
    return max(math.sqrt(2), math.sqrt((x + 1) / (n - x)))


# ==================================================================================================
# Randomized plans
# ==================================================================================================


def _sampleDistinct(n: int, count: int, rng: np.random.Generator) -> Tuple[Permutation, ...]:
    seen: Set[Permutation] = set()
    sample = []
    while len(sample) < count:
        g = randomPermutation(n, rng)
        if g in seen:
            continue  # redraw
        seen.add(g)
        sample.append(g)
    return tuple(sample)


def randomSplit(n: int, count: int, seed: Optional[int] = None) -> SplitPlan:
    """Returns a randomized plan with <count> distinct uniform permutations in A and, independently,
    <count> in B, drawn from numpy.random.default_rng(<seed>).

    Duplicates are redrawn, so both samples are without replacement.
    """
    if n < 1:
        raise InvalidDegreeError(f"Invalid degree {n}: the degree must be at least 1")
    if count < 1:
        raise SampleSizeError(f"Sample size must be at least 1, got {count}")
    if count > factorial(n):
        raise SampleSizeError(f"Cannot draw {count} distinct permutations from S_{n}")
    rng = np.random.default_rng(seed)
    sampleA = _sampleDistinct(n, count, rng)
    sampleB = _sampleDistinct(n, count, rng)
    logger.debug("Sampled %i + %i permutations of degree %i (seed %s)", count, count, n, seed)
    return SplitPlan(
        SplitKind.RANDOMIZED, n, count, count,
        sampleCount=count, seed=seed, sampleA=sampleA, sampleB=sampleB
    )


def coverageLowerBound(k: int, m: ExactCount) -> float:
    """Returns 1 - e^(-k^2/m), a lower bound on the probability that a fixed element of a group of
    order <m> lies in A·B when A and B are independent uniform k-subsets."""
    return -math.expm1(-k * k / m)


def exactMissProbability(k: int, m: ExactCount) -> float:
    """Returns the product over i < k of (1 - k/(m-i)).\n
    This is the probability that a fixed k-subset of the group misses a uniform k-subset, and
    it is at most e^(-k^2/m)."""
    if not 0 <= k <= m:
        raise SampleSizeError(f"Need 0 <= k <= m, got k={k}, m={m}")
    probability = 1.0
    for i in range(k):
        term = 1 - k / (m - i)
        if term <= 0:
            return 0.0
        probability *= term
    return probability


def empiricalMissRate(n: int, k: int, trials: int, seed: Optional[int] = None) -> float:
    """Returns the fraction of S_<n> left uncovered by A·B, averaged over <trials> randomized
    plans with |A| = |B| = <k>.\n
    Its expectation is exactMissProbability(k, n!). Every product is formed, so this is only
    practical for small n."""
    if trials < 1:
        raise InvalidArgumentError(f"Need at least one trial, got {trials}")
    groupOrder = factorial(n)
    seeds = np.random.default_rng(seed).integers(2**32, size=trials)
    missed = 0
    for trialSeed in seeds:
        plan = randomSplit(n, k, int(trialSeed))
        covered = {a.compose(b) for a in plan.sampleA for b in plan.sampleB}
        missed += groupOrder - len(covered)
    rate = missed / (groupOrder * trials)
    logger.info("Empirical miss rate over %i trials (n=%i, k=%i): %.6f", trials, n, k, rate)
    return rate
