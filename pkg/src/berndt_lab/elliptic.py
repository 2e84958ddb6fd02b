"""Elliptic constants and Jacobi elliptic functions.

Complete integrals come from the arithmetic-geometric mean; the function
values are theta-series quotients, which gives complex-argument support for
free (the theta series converge for every finite argument).
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, PoleError

_THETA_RTOL = 1e-18
_THETA_MAX_TERMS = 256


def _agm(a, b):
    while abs(a - b) > 1e-16 * abs(a):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


@dataclass(frozen=True)
class Modulus:
    """Elliptic data derived once from the modulus k in (0,1)."""

    k: float
    kprime: float
    bigK: float
    bigKprime: float
    nome: float  # q = exp(-pi K'/K)
    c_ratio: float  # c = K'/K


def modulus_from_k(k):
    if not 0.0 < k < 1.0:
        raise DomainError(f"modulus k must lie in (0,1), got {k}")
    kprime = math.sqrt((1.0 - k) * (1.0 + k))
    bigK = math.pi / (2.0 * _agm(1.0, kprime))
    bigKprime = math.pi / (2.0 * _agm(1.0, k))
    c = bigKprime / bigK
    return Modulus(k, kprime, bigK, bigKprime, math.exp(-math.pi * c), c)


def theta(j, z, nome):
    """Jacobi theta_j(z, q), j in 1..4, by direct q-series.

    Terms are added until |term| < 1e-18 * |partial sum| twice in a row.
    """
    if not 0.0 <= nome < 1.0:
        raise DomainError(f"nome must lie in [0,1), got {nome}")
    if j not in (1, 2, 3, 4):
        raise DomainError(f"theta index must be 1..4, got {j}")
    z = complex(z)
    q = nome
    if j in (3, 4):
        total = 1.0 + 0.0j
        small = 0
        qn = 1.0
        for n in range(1, _THETA_MAX_TERMS):
            qn *= q ** (2 * n - 1)  # q^(n^2)
            term = 2.0 * qn * cmath.cos(2 * n * z)
            if j == 4 and n & 1:
                term = -term
            total += term
            if abs(term) <= _THETA_RTOL * abs(total):
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
        return total
    # theta_1 / theta_2 carry q^((n+1/2)^2) = q^(1/4) q^(n(n+1))
    total = 0.0 + 0.0j
    small = 0
    qn = 1.0
    scale = q**0.25
    for n in range(0, _THETA_MAX_TERMS):
        if n:
            qn *= q ** (2 * n)  # q^(n(n+1))
        if j == 1:
            term = cmath.sin((2 * n + 1) * z) * qn
            if n & 1:
                term = -term
        else:
            term = cmath.cos((2 * n + 1) * z) * qn
        total += term
        if abs(term) <= _THETA_RTOL * max(abs(total), 1e-300):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    return 2.0 * scale * total


_POLE_GUARD = 1e-8


def _sn_cn_dn(u, m):
    q = m.nome
    zeta = math.pi * complex(u) / (2.0 * m.bigK)
    t2z, t3z, t4z = theta(2, zeta, q), theta(3, zeta, q), theta(4, zeta, q)
    t1z = theta(1, zeta, q)
    t20, t30, t40 = theta(2, 0.0, q), theta(3, 0.0, q), theta(4, 0.0, q)
    if abs(t4z) < _POLE_GUARD:
        raise PoleError("argument too close to a pole of sn/cn/dn")
    sn = (t30 / t20) * (t1z / t4z)
    cn = (t40 / t20) * (t2z / t4z)
    dn = (t40 / t30) * (t3z / t4z)
    return sn, cn, dn


_JACOBI_FNS = ("sn", "cn", "dn", "cd", "sd", "nc", "sc", "nd")


def jacobi(fn, u, m):
    """Jacobi elliptic function value at complex u for modulus data m.

    sn, cn, dn come from theta quotients; the derived functions are exact
    quotients of those three.
    """
    if fn not in _JACOBI_FNS:
        raise DomainError(f"unknown Jacobi function {fn!r}")
    sn, cn, dn = _sn_cn_dn(u, m)
    if fn == "sn":
        return sn
    if fn == "cn":
        return cn
    if fn == "dn":
        return dn
    if fn in ("cd", "sd", "nd"):
        if abs(dn) < _POLE_GUARD:
            raise PoleError("dn vanishes: pole of cd/sd/nd")
        return {"cd": cn, "sd": sn, "nd": 1.0}[fn] / dn
    if abs(cn) < _POLE_GUARD:
        raise PoleError("cn vanishes: pole of nc/sc")
    return {"nc": 1.0, "sc": sn}[fn] / cn


def nc_logderiv(u, m):
    """d/du log nc(u) = sn(u) dn(u) / cn(u)."""
    sn, cn, dn = _sn_cn_dn(u, m)
    if abs(cn) < _POLE_GUARD:
        raise PoleError("cn vanishes: pole of the nc log-derivative")
    return sn * dn / cn
