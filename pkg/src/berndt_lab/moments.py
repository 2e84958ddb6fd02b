"""Moment polynomials and exact moment values of the two integral families.

The polynomial family P_n is generated by the triple-convolution recurrence

    P_{n+2} = x P_{n+1}
              + (y - x^2) sum_j C(2n+2,2j) P_j sum_l C(2n-2j+1,2l) P_l P_{n-j-l}

with P_0 = 1, P_1 = x.  The odd generating series f of the scaled family
a_n = 2^n P_n satisfies f'' = 2x f + (2/3)(y - x^2) f^3, whose first
integral

    3 f'^2 = 3 + 6x f^2 + (y - x^2) f^4

gives a structurally different quadratic/quartic recurrence used as the
independent cross-check route (`p_poly_alt`).

Moment values:  I_n(+) = (-1)^n 2^n P_n(x0, y0)  and
                I_n(-) = (-2)^(n+1) Q_n(x0, y0)
at x0 = 1 - 2 k^2, y0 = 4k^4 - 4k^2 + 4, with
Q_n = sum_p C(2n+2,2p+1) P_p P_{n-p}.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, InconsistencyError
from .exact import BivarPoly

_X = BivarPoly.x()
_Y = BivarPoly.y()
_ONE = BivarPoly.const(1)
_Y_MINUS_X2 = _Y - _X * _X

# Polynomial tables grow append-only under the lock; entries are immutable
# once present, so unlocked reads after construction are safe.
_lock = threading.Lock()
_P: list = [_ONE, _X]
_T: list = []  # T_m = sum_l C(2m+1,2l) P_l P_{m-l}
_P_ALT: list = [_ONE]  # scaled family a_n = 2^n P_n via the energy route
_G_ALT: list = [BivarPoly()]  # g_m = [f^2] coefficients of the scaled family
_Q: dict = {}


def _extend_P(n):
    while len(_P) <= n:
        m = len(_P) - 2  # next polynomial to build is P_{m+2}
        while len(_T) <= m:
            mm = len(_T)
            acc = BivarPoly()
            for l in range(mm + 1):
                acc = acc + (_P[l] * _P[mm - l]).scale(comb(2 * mm + 1, 2 * l))
            _T.append(acc)
        acc = BivarPoly()
        for j in range(m + 1):
            acc = acc + (_P[j] * _T[m - j]).scale(comb(2 * m + 2, 2 * j))
        _P.append(_X * _P[m + 1] + _Y_MINUS_X2 * acc)


def p_poly(n):
    """P_n with exact integer coefficients (triple-convolution recurrence)."""
    if n < 0:
        raise DomainError("n >= 0 required")
    with _lock:
        _extend_P(n)
        return _P[n]


def p_poly_alt(n):
    """P_n rebuilt through the first integral of the governing ODE.

    Same polynomials, different recurrence shape (quadratic and quartic
    convolutions instead of the triple product), so exact agreement with
    p_poly is a meaningful coherence check.
    """
    if n < 0:
        raise DomainError("n >= 0 required")
    with _lock:
        while len(_P_ALT) <= n:
            m = len(_P_ALT)
            a = _P_ALT
            gm = BivarPoly()
            for j in range(m):
                gm = gm + (a[j] * a[m - 1 - j]).scale(comb(2 * m, 2 * j + 1))
            _G_ALT.append(gm)
            g = _G_ALT
            hm = BivarPoly()
            for r in range(1, m):
                hm = hm + (g[r] * g[m - r]).scale(comb(2 * m, 2 * r))
            Sm = BivarPoly()
            for j in range(1, m):
                Sm = Sm + (a[j] * a[m - j]).scale(comb(2 * m, 2 * j))
            six_am = (_X * gm).scale(6) + _Y_MINUS_X2 * hm - Sm.scale(3)
            a.append(six_am.exact_div(6))
        # a_n = 2^n P_n
        return _P_ALT[n].exact_div(2**n)


def q_poly(n):
    """Q_n = sum_p C(2n+2, 2p+1) P_p P_{n-p}."""
    if n < 0:
        raise DomainError("n >= 0 required")
    with _lock:
        if n not in _Q:
            _extend_P(n)
            acc = BivarPoly()
            for p in range(n + 1):
                acc = acc + (_P[p] * _P[n - p]).scale(comb(2 * n + 2, 2 * p + 1))
            _Q[n] = acc
        return _Q[n]


def _xy(k2):
    k2 = Fraction(k2)
    if not 0 < k2 < 1:
        raise DomainError("k^2 must lie in (0,1)")
    return 1 - 2 * k2, 4 * k2 * k2 - 4 * k2 + 4


def moment_plus_exact(n, k2):
    """I_n(+) = (-1)^n 2^n P_n(1-2k^2, 4k^4-4k^2+4), exact."""
    x0, y0 = _xy(k2)
    return Fraction(-1) ** n * 2**n * p_poly(n).eval_rational(x0, y0)


def moment_minus_exact(n, k2):
    """I_n(-) = (-2)^(n+1) Q_n(1-2k^2, 4k^4-4k^2+4), exact."""
    x0, y0 = _xy(k2)
    return Fraction(-2) ** (n + 1) * q_poly(n).eval_rational(x0, y0)


def moment_plus_seq(N, k2):
    """[I_0(+) .. I_N(+)] by the value-level triple-convolution recurrence."""
    x0, _ = _xy(k2)
    a = [Fraction(1), 2 * x0]  # a_n = (-1)^n I_n(+)
    T = []
    for n in range(N - 1):
        while len(T) <= n:
            m = len(T)
            T.append(sum(comb(2 * m + 1, 2 * l) * a[l] * a[m - l] for l in range(m + 1)))
        s = sum(comb(2 * n + 2, 2 * j) * a[j] * T[n - j] for j in range(n + 1))
        a.append(2 * x0 * a[n + 1] + 12 * s)  # 4 (y - x^2) = 12 on-curve
    return [Fraction(-1) ** n * v for n, v in enumerate(a[: N + 1])]


def _moment_plus_energy_seq(N, k2):
    """Same values through the energy (first-integral) recurrence."""
    x0, _ = _xy(k2)
    a = [Fraction(1)]
    g = [Fraction(0)]
    for m in range(1, N + 1):
        gm = sum(comb(2 * m, 2 * j + 1) * a[j] * a[m - 1 - j] for j in range(m))
        g.append(gm)
        hm = sum(comb(2 * m, 2 * r) * g[r] * g[m - r] for r in range(1, m))
        Sm = sum(comb(2 * m, 2 * j) * a[j] * a[m - j] for j in range(1, m))
        a.append(x0 * gm + Fraction(hm, 2) - Fraction(Sm, 2))  # (y-x^2)/6 = 1/2
    return [Fraction(-1) ** n * v for n, v in enumerate(a)]


def moment_minus_seq(N, k2):
    """[I_0(-) .. I_N(-)] by the displayed minus-family recurrence."""
    x0, _ = _xy(k2)
    I = [Fraction(-4), 32 * x0]
    for n in range(N - 1):
        s = sum(comb(2 * n + 4, 2 * j + 2) * I[j] * I[n - j] for j in range(n + 1))
        I.append(-8 * x0 * I[n + 1] - 3 * s)
    return I[: N + 1]


def moment_plus_recur(n, k2):
    """I_n(+) via both value recurrences; raises if the routes disagree."""
    if n < 0:
        raise DomainError("n >= 0 required")
    v1 = moment_plus_seq(n, k2)[n]
    v2 = _moment_plus_energy_seq(n, k2)[n]
    if v1 != v2:
        raise InconsistencyError(f"plus-moment recurrences disagree at n={n}: {v1} vs {v2}")
    return v1


def moment_minus_recur(n, k2):
    """I_n(-) via the displayed recurrence (seeds I_0 = -4, I_1 = 32(1-2k^2))."""
    if n < 0:
        raise DomainError("n >= 0 required")
    return moment_minus_seq(n, k2)[n]


def convolution_identity_check(n):
    """Exact polynomial identity  I_n(-) = -4 sum_p C(2n+1,2p+1) I_p(+) I_{n-p}(+),
    both sides expressed through P and Q before comparing."""
    lhs = q_poly(n).scale((-2) ** (n + 1))
    rhs = BivarPoly()
    for p in range(n + 1):
        c = comb(2 * n + 1, 2 * p + 1) * (-2) ** p * (-2) ** (n - p)
        rhs = rhs + (p_poly(p) * p_poly(n - p)).scale(c)
    rhs = rhs.scale(-4)
    return lhs == rhs


def cross_identity_check(n):
    """Exact polynomial identity  sum_j (n-3j) C(2n+3,2j+1) I_j(+) I_{n-j}(-) = 0."""
    acc = BivarPoly()
    for j in range(n + 1):
        c = (n - 3 * j) * comb(2 * n + 3, 2 * j + 1) * (-2) ** j * (-2) ** (n - j + 1)
        acc = acc + (p_poly(j) * q_poly(n - j)).scale(c)
    return acc.is_zero()


@dataclass(frozen=True)
class CongruenceCheck:
    identity: str
    n: int
    k2: Fraction
    lhs_residue: int
    rhs_residue: int
    modulus: int
    ok: bool


def congruence_mod10(n, k2, _plus_seq=None, _minus_seq=None):
    """Base-10 residue checks on the even plus-moments: with
    4(k^4 - k^2 + 1) = p/q in lowest terms,  q^n I_{2n}(+) == (4p)^n (mod 10);
    in the k^2 = 1/2 case additionally I_{2n}(+) == 2^n and
    I_{2n}(-) == 6 * 2^n (mod 10).  Everything is exact integer arithmetic."""
    k2 = Fraction(k2)
    y0 = 4 * (k2 * k2 - k2 + 1)
    p, q = y0.numerator, y0.denominator
    Ip = _plus_seq if _plus_seq is not None else moment_plus_seq(2 * n, k2)
    v = Ip[2 * n] * Fraction(q) ** n
    if v.denominator != 1:
        raise InconsistencyError(f"q^n I_2n(+) not an integer at n={n}, k2={k2}")
    out = [
        CongruenceCheck(
            "q^n I_2n(+) == (4p)^n mod 10",
            n,
            k2,
            int(v) % 10,
            pow(4 * p, n, 10),
            10,
            int(v) % 10 == pow(4 * p, n, 10),
        )
    ]
    if k2 == Fraction(1, 2):
        out.append(
            CongruenceCheck(
                "I_2n(+) == 2^n mod 10",
                n,
                k2,
                int(Ip[2 * n]) % 10,
                pow(2, n, 10),
                10,
                int(Ip[2 * n]) % 10 == pow(2, n, 10),
            )
        )
        Im = _minus_seq if _minus_seq is not None else moment_minus_seq(2 * n, k2)
        out.append(
            CongruenceCheck(
                "I_2n(-) == 6*2^n mod 10",
                n,
                k2,
                int(Im[2 * n]) % 10,
                6 * pow(2, n, 10) % 10,
                10,
                int(Im[2 * n]) % 10 == 6 * pow(2, n, 10) % 10,
            )
        )
    return out


def congruence_mod3(n, k2, _plus_seq=None):
    """Base-3 residue check on the 3n+1 plus-moments: with 1 - 2k^2 = p/q in
    lowest terms,  q^(3n+1) I_{3n+1}(+) == (-2p)^(3n+1) (mod 3)."""
    k2 = Fraction(k2)
    x0 = 1 - 2 * k2
    p, q = x0.numerator, x0.denominator
    Ip = _plus_seq if _plus_seq is not None else moment_plus_seq(3 * n + 1, k2)
    v = Ip[3 * n + 1] * Fraction(q) ** (3 * n + 1)
    if v.denominator != 1:
        raise InconsistencyError(f"q^(3n+1) I_(3n+1)(+) not an integer at n={n}, k2={k2}")
    lhs = int(v) % 3
    rhs = pow(-2 * p, 3 * n + 1, 3)
    return CongruenceCheck(
        "q^(3n+1) I_(3n+1)(+) == (-2p)^(3n+1) mod 3", n, k2, lhs, rhs, 3, lhs == rhs
    )
