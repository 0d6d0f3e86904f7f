"""Exceptions used by permsplit"""


class PermsplitError(Exception):
    """Base class of every error raised by permsplit"""


class InvalidArgumentError(PermsplitError, ValueError):
    """An argument was outside the range its function accepts"""


class InvalidDegreeError(PermsplitError, ValueError):
    """A permutation degree was not a positive integer"""


class DegreeMismatchError(PermsplitError, ValueError):
    """Two objects that must share a degree did not"""


class NotAPermutationError(PermsplitError, ValueError):
    """An image vector was not a bijection on {1,...,n}"""


class InvalidSubgroupError(PermsplitError, ValueError):
    """The pair (k, l) does not describe an admissible subgroup"""


class InvalidTargetError(PermsplitError, ValueError):
    """A target size was outside [1, n!]"""


class SampleSizeError(PermsplitError, ValueError):
    """More distinct random elements were requested than the group has"""


class CollectionLimitError(PermsplitError, ValueError):
    """A stream was materialized for a degree above the collection limit"""


class InvalidGraphError(PermsplitError, ValueError):
    """An adjacency matrix or edge list does not describe a simple undirected graph"""


class GraphFormatError(PermsplitError, ValueError):
    """A graph file could not be parsed"""


class NotAGeneratorError(PermsplitError, ValueError):
    """The given element does not generate the cyclic group"""


class NotInSubgroupError(PermsplitError, ValueError):
    """The discrete logarithm target is not a power of the generator"""


class MemoryBudgetExceededError(PermsplitError, RuntimeError):
    """The estimated collision table size exceeds the memory cap"""


class ConvergenceError(PermsplitError, RuntimeError):
    """A numerical root search did not converge (this is a bug)"""
