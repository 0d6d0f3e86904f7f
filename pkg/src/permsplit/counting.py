"""Exact and logarithmic counting: factorials, falling factorials, binomials, and the real
solution of x! = sqrt(n!).

Exact counts are arbitrary-precision Python integers. Sizes are compared against sqrt(n!) in
log space, where x! stands for Gamma(x+1).
"""


import logging
import math

from scipy import optimize, special

from .exceptions import ConvergenceError, InvalidArgumentError


ExactCount = int
"""An exact, arbitrary-precision non-negative count such as n! or |S_n : H|"""

LogMagnitude = float
"""The natural logarithm of a positive count"""


BISECTION_TOLERANCE      = 1e-9
BISECTION_MAX_ITERATIONS = 200


logger = logging.getLogger(__name__)


def factorial(n: int) -> ExactCount:
    """Returns n! exactly"""
    if n < 0:
        raise InvalidArgumentError(f"Factorial of a negative number ({n}) is undefined")
    return int(special.factorial(n, exact=True))


def logFactorial(x: float) -> LogMagnitude:
    """Returns log(x!) = log Gamma(x+1) for real <x> >= 0"""
    if x < 0:
        raise InvalidArgumentError(f"Log-factorial of a negative number ({x}) is not supported")
    return float(special.gammaln(x + 1.0))


def fallingFactorial(n: int, k: int) -> ExactCount:
    """Returns (n)_k = n (n-1) ... (n-k+1) exactly ("n pick k")"""
    if n < 0 or k < 0:
        raise InvalidArgumentError(f"Falling factorial ({n})_{k} needs non-negative arguments")
    if k > n:
        return 0
    return int(special.perm(n, k, exact=True))


def binomial(n: int, k: int) -> ExactCount:
    """Returns the binomial coefficient C(n, k) exactly"""
    if n < 0 or k < 0:
        raise InvalidArgumentError(f"Binomial C({n}, {k}) needs non-negative arguments")
    return int(special.comb(n, k, exact=True))


def solveHalfFactorial(n: int) -> float:
    """Returns the positive real x with x! = sqrt(n!).

    Found by bisection of log-factorial on [n/2, n], which always brackets the root since
    ((n/2)!)^2 <= n!. For n = 1 the root in that bracket is x = 1.
    """
    if n < 1:
        raise InvalidArgumentError(f"solveHalfFactorial needs n >= 1, got {n}")
    if n == 1:
        return 1.0
    target = logFactorial(n) / 2

    def residual(x: float) -> float:
        return logFactorial(x) - target

    root, result = optimize.bisect(
        residual, n / 2, n,
        xtol=1e-12, maxiter=BISECTION_MAX_ITERATIONS, full_output=True, disp=False
    )
    error = abs(residual(root))
    if not result.converged or error > BISECTION_TOLERANCE * max(1.0, target):
        raise ConvergenceError(
            f"Bisection for x! = sqrt({n}!) stopped after {result.iterations} iterations "
            f"with residual {error:.3e}"
        )
    logger.debug("solveHalfFactorial(%i) = %.12f after %i iterations", n, root, result.iterations)
    return float(root)


def halfFactorialEstimate(n: int) -> float:
    """Returns the two-term asymptotic estimate (n/2)(1 + log 2 / log n) of solveHalfFactorial(n)"""
    if n < 2:
        raise InvalidArgumentError(f"The asymptotic estimate needs n >= 2, got {n}")
    return n / 2 * (1 + math.log(2) / math.log(n))
