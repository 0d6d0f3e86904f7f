"""The GroupAction protocol that the solver is generic over, and the basic action of S_n on
sequences by moving positions."""


from typing import Any, Hashable, Sequence, Tuple

from typing_extensions import Protocol

from .exceptions import DegreeMismatchError
from .permutation import Permutation


class GroupAction(Protocol):
    """Protocol for a right action of S_n on a set of states.

    Implementations must satisfy
    - apply(identity, s) == s,
    - apply(compose(g, h), s) == apply(h, apply(g, s)),
    - encode(s) == encode(t) exactly when s == t (on the states that can be reached).
    """

    @property
    def degree(self) -> int: ...
    def apply(self, g: Permutation, state: Any) -> Any: ...
    def encode(self, state: Any) -> Hashable: ...


class PermutationAction:
    """S_n acting on length-n sequences by moving the entry at position i to position g(i)"""

    def __init__(self, degree: int):
        self._degree = degree

    @property
    def degree(self) -> int:
        return self._degree

    def apply(self, g: Permutation, state: Sequence) -> Tuple:
        if g.degree != self._degree or len(state) != self._degree:
            raise DegreeMismatchError(
                f"Cannot move a sequence of length {len(state)} by a permutation of degree {g.degree} "
                f"(action degree {self._degree})"
            )
        moved = [None] * self._degree
        for i, target in enumerate(g.images):
            moved[target] = state[i]
        return tuple(moved)

    def encode(self, state: Sequence) -> Hashable:
        return tuple(state)
