"""Exact generating-function polynomials over Q(i): the two multi-parameter
Bernoulli/Euler families, the analytic continuation of the normalized minus
integral at negative integers, the small-x kernel expansions, and the
numeric equivalence of the two repeated-zeta parameterizations.

Everything in this module is exact rational arithmetic; floats appear only
in `appendix_equivalence`, which is a numeric cross-check by design.
"""

import cmath
import math
from fractions import Fraction

from .errors import DomainError, InconsistencyError
from .exact import GaussRational
from .numeric import bernoulli_numbers, euler_at_zero

DEFAULT_ORDER = 64


class GfSeries:
    """Truncated Taylor series with GaussRational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = [c if isinstance(c, GaussRational) else GaussRational(c) for c in coeffs]

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __mul__(self, other):
        N = min(self.order, other.order)
        out = [GaussRational(0) for _ in range(N + 1)]
        for i, ci in enumerate(self.coeffs[: N + 1]):
            if ci == GaussRational(0):
                continue
            for j in range(N + 1 - i):
                out[i + j] = out[i + j] + ci * other.coeffs[j]
        return GfSeries(out)

    def coefficient(self, n):
        return self.coeffs[n]

    @classmethod
    def one(cls, N):
        return cls([GaussRational(1)] + [GaussRational(0)] * N)

    @classmethod
    def exp_like(cls, z, N):
        """e^{z u}: coefficients z^n / n!."""
        z = z if isinstance(z, GaussRational) else GaussRational(z)
        out, p = [], GaussRational(1)
        for n in range(N + 1):
            out.append(p / Fraction(math.factorial(n)))
            p = p * z
        return cls(out)


def bernoulli_factor(a, N):
    """a u / (e^{a u} - 1): coefficients B_n a^n / n!."""
    a = a if isinstance(a, GaussRational) else GaussRational(a)
    B = bernoulli_numbers(N)
    out, p = [], GaussRational(1)
    for n in range(N + 1):
        out.append(p * B[n] / Fraction(math.factorial(n)))
        p = p * a
    return GfSeries(out)


def bernoulli_factor_inverse(a, N):
    """(e^{a u} - 1) / (a u): coefficients a^n / (n+1)!."""
    a = a if isinstance(a, GaussRational) else GaussRational(a)
    out, p = [], GaussRational(1)
    for n in range(N + 1):
        out.append(p / Fraction(math.factorial(n + 1)))
        p = p * a
    return GfSeries(out)


def euler_factor(a, N):
    """2 / (e^{a u} + 1): coefficients E_n(0) a^n / n!."""
    a = a if isinstance(a, GaussRational) else GaussRational(a)
    out, p = [], GaussRational(1)
    for n in range(N + 1):
        out.append(p * euler_at_zero(n) / Fraction(math.factorial(n)))
        p = p * a
    return GfSeries(out)


def bernoulli_barnes(n, z, a):
    """n-th coefficient (times n!) of e^{zu} prod_i a_i u / (e^{a_i u} - 1)."""
    if n < 0:
        raise DomainError("n >= 0 required")
    if any(GaussRational._coerce(ai) == GaussRational(0) for ai in a):
        raise DomainError("zero parameter in Bernoulli product")
    ser = GfSeries.exp_like(z, n)
    for ai in a:
        ser = ser * bernoulli_factor(ai, n)
    return ser.coefficient(n) * Fraction(math.factorial(n))


def euler_barnes(n, x, a):
    """n-th coefficient (times n!) of e^{xu} prod_i 2 / (e^{a_i u} + 1)."""
    if n < 0:
        raise DomainError("n >= 0 required")
    ser = GfSeries.exp_like(x, n)
    for ai in a:
        ser = ser * euler_factor(ai, n)
    return ser.coefficient(n) * Fraction(math.factorial(n))


_ONE_PLUS_I = GaussRational(1, 1)
_ONE_MINUS_I = GaussRational(1, -1)
_I = GaussRational(0, 1)


def continuation_neg(s, p):
    """Value of the continued normalized minus integral at -s (s > 2p int):

        Ihat(-s) = (-2)^p / ((s+1) ... (s+2p)) * B_{2p+s}(p | (1+i,1-i)^p).

    Conjugate-pair parameters and real shift force a real result; a nonzero
    imaginary part would indicate an arithmetic inconsistency.
    """
    if not (isinstance(s, int) and isinstance(p, int)):
        raise DomainError("integer s and p required")
    if p < 1 or s <= 2 * p:
        raise DomainError("need integer s > 2p >= 2")
    params = [_ONE_PLUS_I, _ONE_MINUS_I] * p
    B = bernoulli_barnes(2 * p + s, GaussRational(p), params)
    denom = Fraction(1)
    for j in range(s + 1, s + 2 * p + 1):
        denom *= j
    val = B * (Fraction(-2) ** p / denom)
    if not val.is_real():
        raise InconsistencyError(f"continuation value not real: {val!r}")
    return val


def lemma_g1(p):
    """(sqrt(2i))^p B_p(z=(1+i)/2 | 1, i) with sqrt(2i) = 1+i (principal);
    equals p! times the p-th Taylor coefficient of x^2/(cosh x - cos x)."""
    if p < 0:
        raise DomainError("p >= 0 required")
    B = bernoulli_barnes(p, GaussRational(Fraction(1, 2), Fraction(1, 2)), [GaussRational(1), _I])
    return _ONE_PLUS_I**p * B


def lemma_g2(p2):
    """(1/2) (i/2)^p E_{2p}(0 | 1, i) for even index p2 = 2p; equals
    (-1)^p (2p)! times the x^(2p) Taylor coefficient of 1/(cosh x + cos x)."""
    if p2 < 0 or p2 % 2:
        raise DomainError("even index >= 0 required")
    p = p2 // 2
    E = euler_barnes(p2, GaussRational(0), [GaussRational(1), _I])
    return (_I / 2) ** p * E / 2


def appendix_equivalence(s, p, tol=1e-10, M=400):
    """Numeric check that the two repeated-zeta parameterizations of the
    minus-family integral agree:

        2^p (i/2)^(s/2) zeta_2p(s, p(1+i)/2 | (1,i)^p)
            = 2^p zeta_2p(s, p | (1+i,1-i)^p).

    Term by term the two lattices are related by the exact rotation
    z -> (1-i) z, so both sides are evaluated over the same truncation
    square [0,M]^2 and compared; the check isolates the branch/scaling
    content of the identity (a wrong branch would shift the ratio by a
    phase, not by a tail-sized amount).  Returns a report dict; raises
    InconsistencyError beyond tol.
    """
    from . import _kernels

    if not s > 2 * p:
        raise DomainError("need s > 2p")
    left = _kernels.rect_sum(p * (1 + 1j) / 2, 1.0 + 0j, 1j, float(s), p, False, M, False)
    right = _kernels.rect_sum(complex(p), 1 + 1j, 1 - 1j, float(s), p, False, M, True)
    scale = cmath.exp((s / 2.0) * cmath.log(0.5j))  # (i/2)^(s/2), principal
    lhs = 2.0**p * scale * left
    rhs = 2.0**p * right
    diff = abs(lhs - rhs)
    entry = {
        "identity": "rotated-parameter equivalence",
        "s": s,
        "p": p,
        "lhs": lhs,
        "rhs": rhs,
        "abs_err": diff,
        "tolerance": tol,
        "pass": diff <= tol,
        "terms": 2 * (M + 1) ** 2,
    }
    if not entry["pass"]:
        raise InconsistencyError(f"parameterizations disagree by {diff} (> {tol})")
    return entry
