"""
permsplit factors the symmetric group S_n into splitting sets A·B = S_n of size
close to sqrt(n!), streams those sets in O(n) working memory, and uses them in a
generic meet-in-the-middle solver for group-action discrete logarithms.
"""

__title__            = "permsplit"
__description__      = "Splitting sets for the symmetric group and a baby-step giant-step solver for group-action discrete logarithms."
__url__              = "https://github.com/permsplit/permsplit"
__author__           = "The permsplit developers"
__author_email__     = "permsplit@users.noreply.github.com"
__maintainer__       = "The permsplit developers"
__maintainer_email__ = "permsplit@users.noreply.github.com"
__license__          = "MIT"
__copyright__        = "Copyright 2026 The permsplit developers"
__version__          = "1.0.0"


from .permutation import Permutation, identity, compose, invert
from .subgroup import SubgroupSpec, chooseSubgroupParams
from .splitting import SplitKind, SplitPlan, subgroupSplit, bidirectionalSplit, randomSplit
from .action import GroupAction
from .solver import SolveResult, solve, solveTradeoff, verify
