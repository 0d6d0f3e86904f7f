"""Classical discrete logarithms in a cyclic group C_n = <a> of units modulo q.

Two routes are provided. classicBsgs() is Shanks' baby-step giant-step algorithm, used as the
trusted baseline. dlReduction() reduces the problem to a group-action discrete logarithm: the
units u of Z_n act on C_n by c -> c^u, and for a generator b of C_n the solution of a^u = b is
exactly log_a(b). If b is not a generator, b is first shifted to b a^r for the least r >= 1 that
makes it one, and r is subtracted again at the end.
"""


from typing import Callable, Dict, Optional
from dataclasses import dataclass, field, replace
import logging
import math

from sympy import factorint, isprime, n_order

from .exceptions import InvalidArgumentError, NotAGeneratorError, NotInSubgroupError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclicGroupInstance:
    """A discrete-log instance: find x with <generator>^x = <target> (mod <modulus>).\n
    The group is C_n = <generator>, with n = <order> the multiplicative order of the generator."""

    modulus:   int
    generator: int
    target:    int
    order:     int = field(init=False, compare=False)

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidArgumentError(f"Modulus must be at least 2, got {self.modulus}")
        generator = self.generator % self.modulus
        if math.gcd(generator, self.modulus) != 1:
            raise NotAGeneratorError(f"{self.generator} is not a unit modulo {self.modulus}")
        object.__setattr__(self, "generator", generator)
        object.__setattr__(self, "target", self.target % self.modulus)
        object.__setattr__(self, "order", int(n_order(generator, self.modulus)))

    def withTarget(self, target: int) -> "CyclicGroupInstance":
        return replace(self, target=target)

    def power(self, exponent: int) -> int:
        """Returns generator^exponent (mod modulus)"""
        return pow(self.generator, exponent % self.order, self.modulus)


# ==================================================================================================
# Baby-step giant-step
# ==================================================================================================


def classicBsgs(instance: CyclicGroupInstance) -> int:
    """Returns the least x >= 0 with a^x = b, with m = ceil(sqrt(n)) baby steps a^j in a table
    and giant steps b (a^-m)^i.\n
    Raises NotInSubgroupError if b is not in <a>."""
    q, a, b, n = instance.modulus, instance.generator, instance.target, instance.order
    m = math.isqrt(n - 1) + 1
    babySteps: Dict[int, int] = {}
    value = 1
    for j in range(m):
        babySteps.setdefault(value, j)
        value = value * a % q
    giantFactor = pow(a, -m, q)
    gamma = b
    for i in range(m):
        j = babySteps.get(gamma)
        if j is not None:
            return i * m + j
        gamma = gamma * giantFactor % q
    raise NotInSubgroupError(f"{b} is not a power of {a} modulo {q}")


# ==================================================================================================
# Reduction to a group-action discrete logarithm
# ==================================================================================================


UnitActionSolver = Callable[[CyclicGroupInstance], Optional[int]]
"""Solves the unit-action problem: given a generator b of C_n, find a unit u of Z_n with a^u = b"""


def unitActionSolve(instance: CyclicGroupInstance) -> Optional[int]:
    """Exhaustive unit-action solver: tries the units u = 1, 2, ... of Z_n in increasing order"""
    q, a, b, n = instance.modulus, instance.generator, instance.target, instance.order
    if n == 1:
        return 0 if b == 1 else None
    value = a
    for u in range(1, n):
        if value == b and math.gcd(u, n) == 1:
            return u
        value = value * a % q
    return None


def jacobsthal(n: int) -> int:
    """Returns J(n), the least m such that every m consecutive integers contain one coprime to
    <n> (the largest gap between consecutive units modulo <n>)."""
    if n < 1:
        raise InvalidArgumentError(f"Jacobsthal's function needs n >= 1, got {n}")
    if n == 1:
        return 1
    units = [u for u in range(1, n + 1) if math.gcd(u, n) == 1]
    gaps = [later - earlier for earlier, later in zip(units, units[1:])]
    gaps.append(units[0] + n - units[-1])
    return max(gaps)


def isGenerator(element: int, instance: CyclicGroupInstance) -> bool:
    """Whether <element> has order exactly n modulo the instance's modulus"""
    q, n = instance.modulus, instance.order
    if pow(element, n, q) != 1:
        return False
    return all(pow(element, n // p, q) != 1 for p in factorint(n))


def findGeneratingShift(instance: CyclicGroupInstance) -> int:
    """Returns the least r >= 1 such that b a^r generates C_n.\n
    For b in <a> the search ends within J(n) steps; otherwise raises NotInSubgroupError."""
    q, a, b, n = instance.modulus, instance.generator, instance.target, instance.order
    bound = jacobsthal(n)
    shifted = b
    for r in range(1, bound + 1):
        shifted = shifted * a % q
        if isGenerator(shifted, instance):
            logger.debug("Shift r = %i makes %i a generator (J(%i) = %i)", r, shifted, n, bound)
            return r
    raise NotInSubgroupError(f"No shift within J({n}) = {bound} makes {b} a generator; {b} is not a power of {a} modulo {q}")


def dlReduction(
    instance:    CyclicGroupInstance,
    solver:      UnitActionSolver = unitActionSolve,
    groupOrder:  Optional[int]    = None
) -> int:
    """Returns the least x >= 0 with a^x = b by reduction to the unit-action problem.

    b = 1 gives 0 at once. For prime n any other b generates C_n and <solver> is called once.
    For composite n, b is shifted to b a^r by findGeneratingShift(), <solver> finds y with
    a^y = b a^r, and x = y - r (mod n).

    If <groupOrder> is given, raises NotAGeneratorError unless a has exactly that order.
    """
    n = instance.order
    if groupOrder is not None and n != groupOrder:
        raise NotAGeneratorError(
            f"{instance.generator} has order {n} modulo {instance.modulus}, not {groupOrder}"
        )
    if instance.target == 1:
        return 0
    if isprime(n):
        u = solver(instance)
        if u is None:
            raise NotInSubgroupError(f"{instance.target} is not a power of {instance.generator} modulo {instance.modulus}")
        return u
    r = findGeneratingShift(instance)
    shifted = instance.withTarget(instance.target * instance.power(r))
    y = solver(shifted)
    if y is None:
        raise NotInSubgroupError(f"{instance.target} is not a power of {instance.generator} modulo {instance.modulus}")
    return (y - r) % n
