"""Scalar numeric kernel: gamma, principal complex powers, and the exact
Bernoulli / Euler-at-zero sequences used throughout the series modules."""

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError


def gamma_real(s):
    """Gamma(s) for s > 0.

    Delegates to the C library's Lanczos-based implementation, which is
    accurate to ~1 ulp; relative error stays far below 1e-13.
    """
    if not s > 0:
        raise DomainError(f"gamma_real requires s > 0, got {s}")
    return math.gamma(s)


def cpow_principal(z, s):
    """z**s = exp(s Log z) with the principal logarithm."""
    z = complex(z)
    if z == 0:
        raise DomainError("cpow_principal: zero base")
    return cmath.exp(s * cmath.log(z))


@lru_cache(maxsize=None)
def euler_at_zero(n):
    """E_n(0), the Euler polynomial at 0, as an exact Fraction.

    Coefficients of 2/(e^z + 1) = sum E_n(0) z^n / n!, computed by exact
    series reciprocation: with c_m = [z^m] (e^z + 1)/2 the recursion is
    E_n(0)/n! = delta_{n0} - sum_{m<n} (E_m(0)/m!) c_{n-m}.
    """
    if n < 0:
        raise DomainError("euler_at_zero requires n >= 0")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for m in range(n):
        c = Fraction(1, 2 * math.factorial(n - m))
        acc -= euler_at_zero(m) * c / math.factorial(m)
    return acc * math.factorial(n)


def bernoulli_numbers(N):
    """B_0..B_N exact, convention B_1 = -1/2.

    Standard recursion sum_{j<=n} C(n+1, j) B_j = 0 for n >= 1.
    """
    if N < 0:
        raise DomainError("bernoulli_numbers requires N >= 0")
    B = [Fraction(1)]
    for n in range(1, N + 1):
        s = sum(Fraction(math.comb(n + 1, j)) * B[j] for j in range(n))
        B.append(-s / (n + 1))
    return B
