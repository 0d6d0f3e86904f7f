import json
import math
from collections import Counter
from itertools import permutations

import pytest

from permsplit.counting import factorial, fallingFactorial
from permsplit.exceptions import InvalidDegreeError, InvalidTargetError, SampleSizeError
from permsplit.permutation import Permutation, compose
from permsplit.splitting import (
    SplitKind, bidirectionalSplit, coverageLowerBound, empiricalMissRate, exactMissProbability,
    formatPlan, halfSplitOverhead, prefixStream, randomSplit, sizeRatio, subgroupSizeBound,
    subgroupSplit, suffixStream
)


def allPermutations(n):
    return {Permutation(images) for images in permutations(range(n))}


@pytest.mark.parametrize("n", range(2, 9))
def test_subgroup_split_is_perfect(n):
    plan = subgroupSplit(n)
    assert plan.kind is SplitKind.SUBGROUP_TRANSVERSAL
    assert plan.sizeA * plan.sizeB == factorial(n)
    a = list(plan.streamA())
    b = list(plan.streamB())
    assert (len(a), len(b)) == (plan.sizeA, plan.sizeB)
    products = Counter(compose(x, y) for x in a for y in b)
    assert len(products) == factorial(n)
    assert set(products.values()) == {1}


@pytest.mark.parametrize("n", range(2, 8))
def test_bidirectional_split_is_perfect(n):
    plan = bidirectionalSplit(n)
    k = plan.splitPoint
    assert (plan.sizeA, plan.sizeB) == (fallingFactorial(n, k), factorial(n - k))
    products = Counter(compose(x, y) for x in plan.streamA() for y in plan.streamB())
    assert set(products) == allPermutations(n)
    assert set(products.values()) == {1}


def test_bidirectional_examples():
    plan = bidirectionalSplit(10)
    assert (plan.splitPoint, plan.sizeA, plan.sizeB) == (3, 720, 5040)
    plan = bidirectionalSplit(2)
    assert (plan.splitPoint, plan.sizeA, plan.sizeB) == (1, 2, 1)
    plan = bidirectionalSplit(12)
    assert plan.sizeA * plan.sizeB == factorial(12)
    with pytest.raises(InvalidDegreeError):
        bidirectionalSplit(1)


def test_prefix_and_suffix_streams():
    prefixes = list(prefixStream(4, 2))
    assert len(prefixes) == 12
    assert prefixes[0].oneLine() == (1, 2, 3, 4)
    assert prefixes[1].oneLine() == (1, 3, 2, 4)
    assert prefixes[-1].oneLine() == (4, 3, 1, 2)
    suffixes = list(suffixStream(4, 2))
    assert [g.oneLine() for g in suffixes] == [(1, 2, 3, 4), (1, 2, 4, 3)]


@pytest.mark.parametrize("n", range(10, 21, 2))
def test_exact_half_split_overhead(n):
    expected = n ** -0.25 * 2 ** (n / 2)
    assert expected / 2 <= halfSplitOverhead(n) <= 2 * expected


def test_ratios():
    assert subgroupSplit(2).ratio == pytest.approx(math.sqrt(2))
    assert subgroupSplit(7).ratio == pytest.approx(1.0142, abs=1e-4)
    assert subgroupSplit(28).ratio == pytest.approx(1.2883, abs=1e-3)
    assert sizeRatio(72, 7) == pytest.approx(subgroupSplit(7).ratio)
    average = sum(subgroupSplit(n).ratio for n in range(1, 31)) / 30
    assert average == pytest.approx(1.1201, abs=0.01)


def test_plan_rendering():
    plan = subgroupSplit(7)
    assert formatPlan(plan) == "n=7 kind=subgroup_transversal k=4 l=3 |H|=72 index=70 |A|=70 |B|=72 ratio=1.01419"
    record = json.loads(json.dumps(plan.toDict()))
    assert record["k"] == 4 and record["l"] == 3 and record["order"] == 72 and record["index"] == 70


def test_subgroup_size_bound():
    assert subgroupSizeBound(10, 1000) == pytest.approx(math.sqrt(2))
    # 5! <= 200 < 6!, so the factor is sqrt(6/2)
    assert subgroupSizeBound(7, 200) == pytest.approx(math.sqrt(3))
    with pytest.raises(InvalidTargetError):
        subgroupSizeBound(4, 24)


def test_subgroup_tradeoff_stays_within_the_bound():
    for n in range(7, 11):
        for m in (10, 100, 1000):
            if m >= factorial(n):
                continue
            order = subgroupSplit(n, exactTarget=m).sizeB
            bound = subgroupSizeBound(n, m)
            assert m / bound <= order * (1 + 1e-12)
            assert order <= m * bound * (1 + 1e-12)


def test_random_split_is_seeded_and_distinct():
    first = randomSplit(5, 15, seed=3)
    second = randomSplit(5, 15, seed=3)
    assert first.sampleA == second.sampleA and first.sampleB == second.sampleB
    assert len(set(first.sampleA)) == 15 and len(set(first.sampleB)) == 15
    assert not first.isDeterministic
    assert first.toDict()["seed"] == 3


def test_random_split_of_the_whole_group():
    plan = randomSplit(4, 24, seed=0)
    assert set(plan.sampleA) == allPermutations(4)
    covered = {compose(a, b) for a in plan.streamA() for b in plan.streamB()}
    assert covered == allPermutations(4)


def test_random_split_rejects_oversized_samples():
    with pytest.raises(SampleSizeError):
        randomSplit(4, 25, seed=0)
    with pytest.raises(SampleSizeError):
        randomSplit(4, 0, seed=0)


def test_coverage_formulas():
    assert coverageLowerBound(3, 6) == pytest.approx(1 - math.exp(-1.5))
    assert coverageLowerBound(3, 6) == pytest.approx(0.7769, abs=1e-4)
    m = 10**6
    assert coverageLowerBound(math.sqrt(2 * m), m) == pytest.approx(1 - math.exp(-2))
    for k, m in [(3, 6), (10, 24), (15, 120), (100, 5040)]:
        assert exactMissProbability(k, m) <= math.exp(-k * k / m)
    assert exactMissProbability(4, 6) == 0.0


def test_coverage_of_a_fixed_element_on_s4():
    n, k, trials = 4, 10, 200
    target = Permutation.fromImages([3, 1, 4, 2])
    hits = 0
    for seed in range(trials):
        plan = randomSplit(n, k, seed)
        if any(compose(a, b) == target for a in plan.sampleA for b in plan.sampleB):
            hits += 1
    p = coverageLowerBound(k, factorial(n))
    sigma = math.sqrt(p * (1 - p) / trials)
    assert hits / trials >= p - 3 * sigma


@pytest.mark.slow
def test_miss_rate_near_e_to_the_minus_two_on_s5():
    # k = 15 is the closest integer to sqrt(2 * 5!)
    rate = empiricalMissRate(5, 15, trials=10000, seed=1)
    assert rate == pytest.approx(exactMissProbability(15, 120), abs=0.005)
    assert rate == pytest.approx(math.exp(-2), abs=0.02)
