"""Lambert-series and lattice-sum (Eisenstein-type) representations of the
moment integrals, plus the bridge identity connecting the two families.

Eisenstein lattice sums use the expanding-square enumeration
max(|m|,|n|) <= M with a fixed deterministic order; the exponent-2
(conditionally convergent) case additionally averages the last two square
partial sums.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .barnes import SeriesValue
from .errors import DomainError, InconsistencyError
from .numeric import euler_at_zero

_LAMBERT_RTOL = 1e-18
_LAMBERT_MAX = 200_000

_VARIANTS = ("plus_alt", "minus_alt", "even_den", "sinh")


@dataclass(frozen=True)
class LatticeWindow:
    """Expanding-square half-width for lattice sums."""

    M: int

    def __post_init__(self):
        if self.M < 1:
            raise DomainError("window half-width M must be >= 1")


def lambert_sum(exp, q, variant, tol=_LAMBERT_RTOL):
    """sum_{n>=1} n^exp q^n / denom with denom one of
    1+(-q)^n, 1-(-q)^n, 1-q^(2n); the 'sinh' variant evaluates the
    equivalent sum n^exp / sinh(pi n c) with c = -ln(q)/pi directly."""
    if not 0.0 < q < 1.0:
        if q == 0.0:
            return SeriesValue(0.0, 0.0, 0)
        raise DomainError(f"q must lie in (0,1), got {q}")
    if exp < 1:
        raise DomainError("exponent must be >= 1")
    if variant not in _VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    c = -math.log(q) / math.pi
    total = 0.0
    qn = 1.0
    mqn = 1.0  # (-q)^n
    n = 0
    while n < _LAMBERT_MAX:
        n += 1
        qn *= q
        mqn *= -q
        if variant == "plus_alt":
            term = n**exp * qn / (1.0 + mqn)
        elif variant == "minus_alt":
            term = n**exp * qn / (1.0 - mqn)
        elif variant == "even_den":
            term = n**exp * qn / (1.0 - qn * qn)
        else:
            term = n**exp / math.sinh(math.pi * n * c)
        total += term
        if abs(term) <= tol * abs(total):
            break
    else:
        raise DomainError("Lambert series did not converge within term budget")
    # geometric envelope for the tail: ratio <= ((n+2)/(n+1))^exp * q
    r = ((n + 2) / (n + 1)) ** exp * q
    err = abs(term) * (r / (1 - r)) if r < 1 else float("inf")
    return SeriesValue(total, err + 4e-16 * abs(total), n)


def moment_plus_lambert(p, m):
    """I_{p-1}(+) from the Lambert form
    (pi/K)^(2p) [ -E_{2p-1}(0)/2 + 2 sum n^(2p-1) q^n / (1 + (-q)^n) ]."""
    if p < 1:
        raise DomainError("p >= 1 required")
    s = lambert_sum(2 * p - 1, m.nome, "plus_alt")
    e = float(euler_at_zero(2 * p - 1))
    return (math.pi / m.bigK) ** (2 * p) * (-0.5 * e + 2.0 * s.value)


def moment_minus_lambert(n, m):
    """I_n(-) from the Lambert form
    -(pi/K)^(2n+4) [ E_{2n+3}(0) + 4 sum m^(2n+3) q^m / (1 - (-q)^m) ]."""
    if n < 0:
        raise DomainError("n >= 0 required")
    s = lambert_sum(2 * n + 3, m.nome, "minus_alt")
    e = float(euler_at_zero(2 * n + 3))
    return -((math.pi / m.bigK) ** (2 * n + 4)) * (e + 4.0 * s.value)


def _lattice_value(parts, exponent):
    """Final value from square partials: plain total when absolutely
    convergent (exponent >= 3), averaged last two squares at exponent 2."""
    if exponent <= 2:
        return 0.5 * (parts[-1] + parts[-2])
    return parts[-1]


def eisenstein_plus_full(p, m, win):
    """I_p(+) as the difference of two full-lattice power sums:

        I_p(+) = (-1)^(p+1) (2p+1)! sum_{(m,n) in Z^2}
                 [ (2mK + i(2n+1)K')^(-2p-2) - ((2m+1)K + i 2nK')^(-2p-2) ]

    (sign fixed by validation against the exact moments).
    Returns (value, imag_residue, terms)."""
    if p < 0:
        raise DomainError("p >= 0 required")
    e = 2 * p + 2
    K, Kp = m.bigK, m.bigKprime
    s1 = _kernels.eis_partials(2 * K, 2j * Kp, 1j * Kp, e, win.M)
    s2 = _kernels.eis_partials(2 * K, 2j * Kp, complex(K), e, win.M)
    tot = _lattice_value([a - b for a, b in zip(s1, s2)], e)
    val = (-1) ** (p + 1) * math.factorial(2 * p + 1) * tot
    return val.real, abs(val.imag), 2 * (2 * win.M + 1) ** 2


def eisenstein_plus(p, m, win, imag_tol=1e-6):
    value, resid, _ = eisenstein_plus_full(p, m, win)
    scale = max(1.0, abs(value))
    if resid > imag_tol * scale:
        raise InconsistencyError(f"imaginary residue {resid} above tolerance")
    return value


def eisenstein_minus_full(n, m, win):
    """I_n(-) = (-1)^(n+1) 2 (2n+3)! sum_{(p,q) in Z^2}
                ((2q + p - 1)K + i p K')^(-2n-4).

    Returns (value, imag_residue, terms)."""
    if n < 0:
        raise DomainError("n >= 0 required")
    e = 2 * n + 4
    K, Kp = m.bigK, m.bigKprime
    # base = p (K + i K') + q (2K) - K over lattice indices (p, q)
    parts = _kernels.eis_partials(complex(K, Kp), complex(2 * K), complex(-K), e, win.M)
    tot = _lattice_value(parts, e)
    val = (-1) ** (n + 1) * 2.0 * math.factorial(2 * n + 3) * tot
    return val.real, abs(val.imag), (2 * win.M + 1) ** 2


def eisenstein_minus(n, m, win, imag_tol=1e-6):
    value, resid, _ = eisenstein_minus_full(n, m, win)
    scale = max(1.0, abs(value))
    if resid > imag_tol * scale:
        raise InconsistencyError(f"imaginary residue {resid} above tolerance")
    return value


def weierstrass_bridge(n, m, win):
    """Lattice form of 2 I_{n+1}(+) - I_n(-):

        8 (pi/K)^(2n+4) [ (-1)^n E_{2n+3}(0) / (4 c^(2n+4))
            + (-1)^n (2n+3)!/pi^(2n+4)
              sum_{p,q>=1} 2 Re (2p + i c(2q-1))^(-2n-4) ]

    with c = K'/K.  The Euler-term sign (-1)^n is forced by direct
    evaluation (a fixed negative sign only matches at odd n)."""
    if n < 0:
        raise DomainError("n >= 0 required")
    e = 2 * n + 4
    c = m.c_ratio
    # bases 2p + i c (2q - 1), p, q >= 1
    S = _kernels.quad1_sum(2.0 + 0j, 2j * c, -1j * c, e, win.M)
    lat = 2.0 * S.real
    sgn = -1.0 if n & 1 else 1.0
    e0 = float(euler_at_zero(2 * n + 3))
    inner = sgn * e0 / (4.0 * c**e) + sgn * math.factorial(2 * n + 3) / math.pi**e * lat
    return 8.0 * (math.pi / m.bigK) ** e * inner
