import pytest
from sympy import primerange, primitive_root
from sympy.ntheory.residue_ntheory import discrete_log

from permsplit.discrete_log import (
    CyclicGroupInstance, classicBsgs, dlReduction, findGeneratingShift, isGenerator, jacobsthal,
    unitActionSolve
)
from permsplit.exceptions import NotAGeneratorError, NotInSubgroupError


def powerScan(instance):
    value = 1
    for x in range(instance.order):
        if value == instance.target:
            return x
        value = value * instance.generator % instance.modulus
    return None


def test_bsgs_example():
    assert classicBsgs(CyclicGroupInstance(11, 2, 9)) == 6
    assert classicBsgs(CyclicGroupInstance(11, 2, 1)) == 0


@pytest.mark.parametrize("p", list(primerange(2, 102)))
def test_bsgs_matches_power_scan(p):
    a = primitive_root(p)
    for b in range(1, p):
        instance = CyclicGroupInstance(p, a, b)
        assert classicBsgs(instance) == powerScan(instance)


def test_bsgs_in_a_proper_subgroup():
    # 4 has order 5 modulo 11
    instance = CyclicGroupInstance(11, 4, 5)
    assert instance.order == 5
    assert classicBsgs(instance) == discrete_log(11, 5, 4)
    with pytest.raises(NotInSubgroupError):
        classicBsgs(CyclicGroupInstance(11, 4, 2))


@pytest.mark.parametrize("p", list(primerange(2, 102)))
def test_reduction_matches_bsgs(p):
    a = primitive_root(p)
    for b in range(1, p):
        instance = CyclicGroupInstance(p, a, b)
        assert dlReduction(instance) == classicBsgs(instance)


def test_reduction_in_prime_order_subgroups():
    # 2 has order 7 modulo 127, 16 has order 7 modulo 29
    for modulus, generator in ((127, 2), (29, 16)):
        instance = CyclicGroupInstance(modulus, generator, 1)
        assert instance.order == 7
        for x in range(7):
            target = pow(generator, x, modulus)
            assert dlReduction(instance.withTarget(target)) == x


def test_prime_shortcut_for_the_identity():
    calls = []

    def solver(instance):
        calls.append(instance)
        return unitActionSolve(instance)

    assert dlReduction(CyclicGroupInstance(29, 16, 1), solver) == 0
    assert calls == []
    dlReduction(CyclicGroupInstance(29, 16, 16 ** 3 % 29), solver)
    assert len(calls) == 1


def test_jacobsthal():
    assert jacobsthal(1) == 1
    assert jacobsthal(2) == 2
    assert jacobsthal(7) == 2
    assert jacobsthal(6) == 4
    assert jacobsthal(30) == 6


def test_shift_search_stays_within_jacobsthal():
    instance = CyclicGroupInstance(29, 16, 1)
    for x in range(7):
        shift = findGeneratingShift(instance.withTarget(pow(16, x, 29)))
        assert 1 <= shift <= jacobsthal(7)
    for p in (31, 61, 97):
        a = primitive_root(p)
        for b in range(1, p):
            instance = CyclicGroupInstance(p, a, b)
            shift = findGeneratingShift(instance)
            assert shift <= jacobsthal(p - 1)
            assert isGenerator(b * pow(a, shift, p) % p, instance)


def test_unit_action_solver():
    instance = CyclicGroupInstance(11, 2, 8)
    # 2^3 = 8 and 3 is a unit modulo 10
    assert unitActionSolve(instance) == 3
    assert unitActionSolve(instance.withTarget(4)) is None


def test_invalid_instances():
    with pytest.raises(NotAGeneratorError):
        CyclicGroupInstance(12, 4, 1)
    with pytest.raises(NotAGeneratorError):
        dlReduction(CyclicGroupInstance(11, 4, 5), groupOrder=10)
    with pytest.raises(NotInSubgroupError):
        dlReduction(CyclicGroupInstance(11, 4, 2))
