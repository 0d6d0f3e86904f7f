from itertools import permutations

import numpy as np
import pytest

from permsplit.counting import factorial
from permsplit.exceptions import InvalidArgumentError
from permsplit.hashed_array import (
    HashedArray, HashedArrayOracle, hashedArrayAction, hashedArrayPuzzle, hashedArraySolve
)
from permsplit.permutation import Permutation, compose, identity, randomPermutation


def test_oracle_is_injective_and_positive():
    oracle = HashedArrayOracle(5, key=11)
    hashes = {oracle.hash(arrangement) for arrangement in permutations(range(5))}
    assert len(hashes) == factorial(5)
    assert min(hashes) >= 1 and max(hashes) <= factorial(5)


def test_keys_change_the_hashes():
    arrangement = (2, 0, 3, 1)
    assert HashedArrayOracle(4, key=1).hash(arrangement) == HashedArrayOracle(4, key=1).hash(arrangement)
    hashesA = [HashedArrayOracle(6, key=1).hash(p) for p in permutations(range(6))]
    hashesB = [HashedArrayOracle(6, key=2).hash(p) for p in permutations(range(6))]
    assert hashesA != hashesB


def test_action_law(rng):
    first, _ = hashedArrayPuzzle(5, identity(5), key=3)
    action = hashedArrayAction(first.oracle)
    for _ in range(20):
        g, h = randomPermutation(5, rng), randomPermutation(5, rng)
        assert action.encode(action.apply(compose(g, h), first)) == action.encode(action.apply(h, action.apply(g, first)))


def test_equal_arrays_give_the_identity():
    first, second = hashedArrayPuzzle(4, identity(4), key=5)
    assert hashedArraySolve(first, second).witness == identity(4)


def test_hidden_permutation_is_recovered_exactly():
    hidden = Permutation.fromImages([3, 1, 2])
    first, second = hashedArrayPuzzle(3, hidden, key=9)
    assert hashedArraySolve(first, second).witness == hidden


def test_six_objects_within_the_table_bound():
    rng = np.random.default_rng(12)
    hidden = randomPermutation(6, rng)
    first, second = hashedArrayPuzzle(6, hidden, key=12)
    result = hashedArraySolve(first, second)
    assert result.witness == hidden
    assert result.storedCount <= 2 ** 0.5 * factorial(6) ** 0.5


def test_rekeying_never_changes_the_witness(rng):
    for _ in range(10):
        hidden = randomPermutation(5, rng)
        witnesses = set()
        for key in range(4):
            first, second = hashedArrayPuzzle(5, hidden, key=key)
            witnesses.add(hashedArraySolve(first, second, budget=10).witness)
        assert witnesses == {hidden}


def test_arrays_must_share_an_oracle():
    first, _ = hashedArrayPuzzle(3, identity(3), key=1)
    _, other = hashedArrayPuzzle(3, identity(3), key=1)
    with pytest.raises(InvalidArgumentError):
        hashedArraySolve(first, other)
