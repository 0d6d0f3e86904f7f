"""Provides the Permutation class, permutation arithmetic and streaming arrangement helpers.

Composition convention: ``compose(g, h)`` applies g first and h second, so
``(i^g)^h = i^(gh)``. Equivalently, ``compose(g, h).images[i] == h.images[g.images[i]]``.
This is a right action on points. Every other module (coset minimality, the solver's
``compose(a, b)`` witnesses, the group actions) relies on it.

Points are 0-based internally and 1-based in every text rendering.
"""


from typing import Iterable, Iterator, List, MutableSequence, Sequence, Tuple
from collections import Counter

import numpy as np

from .exceptions import InvalidDegreeError, DegreeMismatchError, NotAPermutationError


# ==================================================================================================
# Permutation class
# ==================================================================================================


class Permutation:
    """An element of the symmetric group S_n, stored as its 0-based image vector.

    ``images[i]`` is the image of point i. With the base [1, 2, ..., n], the 1-based
    rendering of the image vector is the base image of the permutation.

    Permutations are immutable and hashable. They compare by lexicographic order of their
    base images, which is the ≺ order used for coset representatives.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        """Constructs a permutation from a 0-based image vector.\n
        If <check> is False, the bijection test is skipped. Only do this for vectors that are
        permutations by construction."""
        self._images: Tuple[int, ...] = tuple(images)
        if check:
            _checkBijection(self._images, offset=0)

    @staticmethod
    def fromImages(images: Iterable[int]) -> "Permutation":
        """Constructs a permutation from a 1-based image vector, e.g. [2, 3, 1]."""
        oneBased = tuple(images)
        _checkBijection(oneBased, offset=1)
        return Permutation((x - 1 for x in oneBased), check=False)

    @staticmethod
    def cycle(degree: int, points: Sequence[int]) -> "Permutation":
        """Returns the cycle (points[0] points[1] ... points[-1]) of S_<degree>.\n
        <points> are 1-based. A cycle of length 0 or 1 is the identity."""
        images = list(range(degree))
        for i, point in enumerate(points):
            images[point - 1] = points[(i + 1) % len(points)] - 1
        return Permutation(images)

    @property
    def images(self) -> Tuple[int, ...]:
        """The 0-based image vector"""
        return self._images

    @property
    def degree(self) -> int:
        """The degree n of the symmetric group this permutation belongs to"""
        return len(self._images)

    def oneLine(self) -> Tuple[int, ...]:
        """The 1-based image vector (the base image)"""
        return tuple(x + 1 for x in self._images)

    def apply(self, point: int) -> int:
        """Returns the image of the 0-based <point>"""
        return self._images[point]

    def compose(self, other: "Permutation") -> "Permutation":
        """Returns the permutation that applies [self] first and [other] second.\n
        Equivalent to [self] * [other]."""
        if len(self._images) != len(other._images):
            raise DegreeMismatchError(f"Cannot compose permutations of degree {self.degree} and {other.degree}")
        return Permutation(map(other._images.__getitem__, self._images), check=False)

    def inverted(self) -> "Permutation":
        """Returns the inverse of this permutation.\n
        Equivalent to ~[self]."""
        inverse = [0] * len(self._images)
        for i, x in enumerate(self._images):
            inverse[x] = i
        return Permutation(inverse, check=False)

    def isIdentity(self) -> bool:
        """Whether this permutation fixes every point"""
        return all(i == x for i, x in enumerate(self._images))

    def cycles(self) -> str:
        """Returns the disjoint cycle notation with 1-based points, omitting fixed points.\n
        The identity is rendered as "()"."""
        seen = [False] * len(self._images)
        parts: List[str] = []
        for start in range(len(self._images)):
            if seen[start] or self._images[start] == start:
                seen[start] = True
                continue
            cyclePoints = []
            point = start
            while not seen[point]:
                seen[point] = True
                cyclePoints.append(str(point + 1))
                point = self._images[point]
            parts.append(f"({' '.join(cyclePoints)})")
        return "".join(parts) if parts else "()"

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def __invert__(self) -> "Permutation":
        return self.inverted()

    def __len__(self) -> int:
        return len(self._images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __str__(self) -> str:
        return formatPermutation(self)

    def __repr__(self) -> str:
        return f"Permutation.fromImages({list(self.oneLine())})"


def _checkBijection(images: Sequence[int], offset: int):
    n = len(images)
    if n == 0:
        raise InvalidDegreeError("A permutation must have degree at least 1")
    if sorted(images) == list(range(offset, n + offset)):
        return
    for value in images:
        if not offset <= value < n + offset:
            raise NotAPermutationError(f"Value {value} is out of range for a permutation of degree {n}")
    duplicated = [value for value, count in Counter(images).items() if count > 1]
    raise NotAPermutationError(f"Value {duplicated[0]} appears more than once; not a permutation of degree {n}")


# ==================================================================================================
# Group operations
# ==================================================================================================


def identity(n: int) -> Permutation:
    """Returns the identity of S_<n>"""
    if n < 1:
        raise InvalidDegreeError(f"Invalid degree {n}: the degree must be at least 1")
    return Permutation(range(n), check=False)


def compose(g: Permutation, h: Permutation) -> Permutation:
    """Returns gh, the permutation that applies <g> first and <h> second"""
    return g.compose(h)


def invert(g: Permutation) -> Permutation:
    """Returns the inverse of <g>"""
    return g.inverted()


def randomPermutation(n: int, rng: np.random.Generator) -> Permutation:
    """Returns a uniformly random element of S_<n> drawn from <rng>"""
    if n < 1:
        raise InvalidDegreeError(f"Invalid degree {n}: the degree must be at least 1")
    return Permutation(rng.permutation(n).tolist(), check=False)


# ==================================================================================================
# Text format
# ==================================================================================================


def formatPermutation(g: Permutation) -> str:
    """Renders <g> as one line of space-separated 1-based images, e.g. "2 3 1"."""
    return " ".join(str(x + 1) for x in g.images)


def parsePermutation(text: str) -> Permutation:
    """Parses one line of space-separated 1-based images.\n
    Raises NotAPermutationError naming the offending value if the line is not a bijection."""
    tokens = text.split()
    try:
        values = [int(token) for token in tokens]
    except ValueError as e:
        raise NotAPermutationError(f"Could not parse permutation {text!r}: {e}") from e
    return Permutation.fromImages(values)


# ==================================================================================================
# Streaming arrangements
# ==================================================================================================


def nextPermutation(seq: MutableSequence[int]) -> bool:
    """Advances <seq> in place to its lexicographic successor.\n
    Returns False (leaving <seq> sorted ascending again) when <seq> was the last arrangement."""
    i = len(seq) - 2
    while i >= 0 and seq[i] >= seq[i + 1]:
        i -= 1
    if i < 0:
        seq.reverse()
        return False
    j = len(seq) - 1
    while seq[j] <= seq[i]:
        j -= 1
    seq[i], seq[j] = seq[j], seq[i]
    seq[i + 1:] = seq[:i:-1]
    return True


def nextCombination(indices: MutableSequence[int], poolSize: int) -> bool:
    """Advances the increasing index tuple <indices> (a subset of range(<poolSize>)) in place
    to its lexicographic successor.\n
    Returns False (resetting <indices> to 0, 1, ..., r-1) when it was the last subset."""
    r = len(indices)
    i = r - 1
    while i >= 0 and indices[i] == poolSize - r + i:
        i -= 1
    if i < 0:
        indices[:] = range(r)
        return False
    indices[i] += 1
    for j in range(i + 1, r):
        indices[j] = indices[j - 1] + 1
    return True


def lexStream(groundSet: Iterable[int]) -> Iterator[Tuple[int, ...]]:
    """Yields every arrangement of <groundSet> exactly once, in lexicographic order.\n
    Working state is a single buffer of len(<groundSet>) integers. An empty ground set yields a
    single empty arrangement."""
    buffer = sorted(groundSet)
    yield tuple(buffer)
    while nextPermutation(buffer):
        yield tuple(buffer)
