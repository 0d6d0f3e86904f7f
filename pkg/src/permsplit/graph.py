"""Graph isomorphism as a group-action discrete logarithm.

S_n acts on adjacency matrices of simple undirected graphs on n vertices by relabeling:
M^g = P_g M P_g^-1, i.e. M^g[g(i)][g(j)] = M[i][j]. Two graphs are isomorphic exactly when one is
in the orbit of the other.
"""


from typing import Iterable, List, Optional, Sequence, Tuple, Union
from pathlib import Path
import logging

import numpy as np

from .exceptions import DegreeMismatchError, GraphFormatError, InvalidArgumentError, InvalidDegreeError, InvalidGraphError
from .permutation import Permutation
from .splitting import SplitKind, randomSplit, subgroupSplit
from .solver import DEFAULT_MEMORY_CAP_BYTES, DEFAULT_THREADS, SolveResult, solve, solveTradeoff


logger = logging.getLogger(__name__)


# ==================================================================================================
# AdjacencyMatrix
# ==================================================================================================


class AdjacencyMatrix:
    """The adjacency matrix of a simple undirected graph: symmetric, 0/1, zero diagonal.

    Vertices are 0-based internally and 1-based in edge lists and files.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Union[np.ndarray, Sequence[Sequence[int]]]):
        array = np.asarray(bits)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DegreeMismatchError(f"An adjacency matrix must be square, got shape {array.shape}")
        if array.shape[0] < 1:
            raise InvalidDegreeError("A graph must have at least one vertex")
        if not np.isin(array, (0, 1)).all():
            raise InvalidGraphError("Adjacency matrix entries must be 0 or 1")
        array = array.astype(np.uint8)
        if (array != array.T).any():
            raise InvalidGraphError("Adjacency matrix is not symmetric")
        if array.diagonal().any():
            raise InvalidGraphError("Adjacency matrix has a non-zero diagonal (self-loop)")
        array.setflags(write=False)
        self._bits = array

    @staticmethod
    def fromEdges(n: int, edges: Iterable[Tuple[int, int]]) -> "AdjacencyMatrix":
        """Builds the graph on <n> vertices with the given 1-based <edges>"""
        if n < 1:
            raise InvalidDegreeError(f"A graph must have at least one vertex, got {n}")
        bits = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidGraphError(f"Edge {u} {v} has a vertex outside 1..{n}")
            if u == v:
                raise InvalidGraphError(f"Edge {u} {v} is a self-loop")
            bits[u - 1, v - 1] = bits[v - 1, u - 1] = 1
        return AdjacencyMatrix(bits)

    @property
    def n(self) -> int:
        """The number of vertices"""
        return self._bits.shape[0]

    @property
    def bits(self) -> np.ndarray:
        """The read-only n x n matrix"""
        return self._bits

    def edges(self) -> List[Tuple[int, int]]:
        """Returns the edges as sorted 1-based pairs (u, v) with u < v"""
        us, vs = np.nonzero(np.triu(self._bits))
        return [(int(u) + 1, int(v) + 1) for u, v in zip(us, vs)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return self._bits.shape == other._bits.shape and bool((self._bits == other._bits).all())

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self._bits).tobytes()))

    def __repr__(self) -> str:
        return f"AdjacencyMatrix.fromEdges({self.n}, {self.edges()})"


# ==================================================================================================
# Conjugation action
# ==================================================================================================


class ConjugationAction:
    """S_n acting on AdjacencyMatrix objects of n vertices by relabeling vertices"""

    def __init__(self, n: int):
        if n < 1:
            raise InvalidDegreeError(f"A graph must have at least one vertex, got {n}")
        self._n = n

    @property
    def degree(self) -> int:
        return self._n

    def apply(self, g: Permutation, state: AdjacencyMatrix) -> AdjacencyMatrix:
        if g.degree != self._n or state.n != self._n:
            raise DegreeMismatchError(
                f"Cannot relabel a graph on {state.n} vertices by a permutation of degree {g.degree} "
                f"(action degree {self._n})"
            )
        inverse = np.asarray(g.inverted().images)
        return AdjacencyMatrix(state.bits[np.ix_(inverse, inverse)])

    def encode(self, state: AdjacencyMatrix) -> bytes:
        """The row-major bit string of the matrix, packed into bytes"""
        return np.packbits(state.bits).tobytes()


def conjugationAction(n: int) -> ConjugationAction:
    """Returns the relabeling action of S_<n> on graphs with <n> vertices"""
    return ConjugationAction(n)


def graphIso(
    m:              AdjacencyMatrix,
    n:              AdjacencyMatrix,
    budget:         Optional[int] = None,
    samples:        Optional[int] = None,
    seed:           Optional[int] = None,
    threads:        int           = DEFAULT_THREADS,
    memoryCapBytes: Optional[int] = DEFAULT_MEMORY_CAP_BYTES
) -> SolveResult:
    """Searches for a relabeling g with <m>^g = <n>.

    By default the subgroup plan closest to sqrt(n!) is used. With <budget>, the stored side is
    the subgroup closest to <budget> entries. With <samples>, a randomized plan of that many
    elements per side (seeded by <seed>) is used instead, and a negative answer is evidence only.

    Graphs of different sizes are reported as non-isomorphic with proof, without searching.
    Raises MemoryBudgetExceededError if the table would exceed <memoryCapBytes>.
    """
    if m.n != n.n:
        logger.info("Graphs have %i and %i vertices; not isomorphic.", m.n, n.n)
        return SolveResult(None, True, "B", 0, 0, 0.0, SplitKind.SUBGROUP_TRANSVERSAL)
    action = conjugationAction(m.n)
    if samples is not None:
        plan = randomSplit(m.n, samples, seed)
        result = solve(action, m, n, plan, threads=threads, memoryCapBytes=memoryCapBytes)
    elif budget is not None:
        result = solveTradeoff(action, m, n, budget, threads=threads, memoryCapBytes=memoryCapBytes)
    else:
        plan = subgroupSplit(m.n)
        result = solve(action, m, n, plan, threads=threads, memoryCapBytes=memoryCapBytes)
    return result


# ==================================================================================================
# Invariants
# ==================================================================================================


def degreeMultiset(m: AdjacencyMatrix) -> Tuple[int, ...]:
    """Returns the sorted vertex degrees"""
    return tuple(sorted(int(d) for d in m.bits.sum(axis=1)))


def edgeCount(m: AdjacencyMatrix) -> int:
    return int(m.bits.sum()) // 2


def triangleCount(m: AdjacencyMatrix) -> int:
    """Returns the number of triangles, trace(M^3) / 6"""
    a = m.bits.astype(np.int64)
    return int(np.trace(a @ a @ a)) // 6


def randomGraph(n: int, p: float, rng: np.random.Generator) -> AdjacencyMatrix:
    """Returns a G(n, p) random graph drawn from <rng>"""
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError(f"Edge probability must lie in [0, 1], got {p}")
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return AdjacencyMatrix((upper | upper.T).astype(np.uint8))


# ==================================================================================================
# File format
# ==================================================================================================


def parseGraph(text: str, source: str = "<string>") -> AdjacencyMatrix:
    """Parses the graph text format: a first line "n", then one "u v" edge per line (1-based).\n
    Everything after a '#' is a comment; blank lines are ignored. Errors name the line."""
    n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    for lineNumber, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        try:
            values = [int(token) for token in tokens]
        except ValueError as e:
            raise GraphFormatError(f"{source}, line {lineNumber}: expected integers, got {content!r}") from e
        if n is None:
            if len(values) != 1 or values[0] < 1:
                raise GraphFormatError(f"{source}, line {lineNumber}: expected a positive vertex count, got {content!r}")
            n = values[0]
            continue
        if len(values) != 2:
            raise GraphFormatError(f"{source}, line {lineNumber}: expected an edge \"u v\", got {content!r}")
        u, v = values
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"{source}, line {lineNumber}: vertex outside 1..{n} in edge {u} {v}")
        if u == v:
            raise GraphFormatError(f"{source}, line {lineNumber}: self-loop {u} {v}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError(f"{source}: missing vertex count line")
    return AdjacencyMatrix.fromEdges(n, edges)


def formatGraph(m: AdjacencyMatrix) -> str:
    """Renders <m> in the text format read by parseGraph()"""
    lines = [str(m.n)] + [f"{u} {v}" for u, v in m.edges()]
    return "\n".join(lines) + "\n"


def readGraph(path: Union[str, Path]) -> AdjacencyMatrix:
    path = Path(path)
    return parseGraph(path.read_text(encoding="utf-8"), source=str(path))


def writeGraph(m: AdjacencyMatrix, path: Union[str, Path]):
    Path(path).write_text(formatGraph(m), encoding="utf-8")
