"""Discrete random variable whose moment generating function is nc(u, k).

The law lives on +-x_n with x_n = (2n-1) pi / (2 K') and weights

    p_n = (pi / (k' K')) q*^(n-1/2) / (1 + q*^(2n-1)),

where q* is the nome that makes the weights sum to 1.  Both candidate
nomes exp(-pi K/K') and exp(-pi K'/K) are evaluated and the normalization
test arbitrates; the defect of the rejected choice is kept in the law so
reports can show the arbitration instead of hiding it.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .elliptic import jacobi
from .errors import AccuracyError, DomainError

_SUPPORT_DOC = "x_n = (2n-1) pi / (2 K')"


@dataclass(frozen=True)
class DiscreteLaw:
    support_scale: float  # x_n = (2n-1) * support_scale
    weights: tuple  # p_n for n = 1..N (shared by +x_n and -x_n)
    nome_used: float
    nome_label: str  # which exponent direction won the normalization test
    normalization_defect: float
    rejected_nome: float
    rejected_defect: float


def _weights_for(q, kprime, bigKprime, N):
    pref = math.pi / (kprime * bigKprime)
    return tuple(pref * q ** (n - 0.5) / (1.0 + q ** (2 * n - 1)) for n in range(1, N + 1))


def build_law(m, N=60):
    """Construct the law for modulus data m with N support pairs."""
    if N < 1:
        raise DomainError("N >= 1 required")
    q_direct = math.exp(-math.pi * m.bigK / m.bigKprime)
    q_reverse = math.exp(-math.pi * m.bigKprime / m.bigK)
    cands = []
    for label, q in (("exp(-pi K/K')", q_direct), ("exp(-pi K'/K)", q_reverse)):
        w = _weights_for(q, m.kprime, m.bigKprime, N)
        defect = abs(2.0 * sum(w) - 1.0)
        cands.append((defect, label, q, w))
    cands.sort(key=lambda t: t[0])
    best, other = cands[0], cands[1]
    return DiscreteLaw(
        support_scale=math.pi / (2.0 * m.bigKprime),
        weights=best[3],
        nome_used=best[2],
        nome_label=best[1],
        normalization_defect=best[0],
        rejected_nome=other[2],
        rejected_defect=other[0],
    )


def mgf(u, law):
    """E[e^{uX}] = sum_n p_n 2 cosh(u x_n); partial sums must be Cauchy."""
    total = 0.0
    prev_term = None
    for n, p in enumerate(law.weights, start=1):
        term = 2.0 * p * math.cosh(u * (2 * n - 1) * law.support_scale)
        total += term
        if prev_term is not None and n > 5 and abs(term) > abs(prev_term):
            raise DomainError(f"mgf series diverges at |u| = {abs(u)}")
        prev_term = term
    if abs(prev_term) > 1e-12 * abs(total):
        raise AccuracyError("mgf truncation not converged; increase N in build_law")
    return total


def _even_moments(law, maxn):
    out = []
    for j in range(1, maxn + 1):
        mu = 0.0
        for n, p in enumerate(law.weights, start=1):
            x = (2 * n - 1) * law.support_scale
            mu += 2.0 * p * x ** (2 * j)
        out.append(mu)
    return out


def cumulants(law, maxn=4):
    """Signed even cumulants c_{2j} = (-1)^(j-1) kappa_{2j}, j = 1..maxn.

    This is the sign convention under which the sequence reproduces the
    plus-family moments (c_{2j} equals the (2j)!-scaled u^{2j} coefficient
    of -log E[e^{iuX}]).  Computed by the exact series log of the truncated
    even-moment series, not by numerical differentiation."""
    if maxn < 1 or maxn > 4:
        raise DomainError("1 <= maxn <= 4 (conditioning)")
    mus = _even_moments(law, maxn)
    # M(u) = 1 + sum mu_{2j} u^{2j}/(2j)!; log via -sum_{r>=1} (-(M-1))^r / r
    coeffs = {2 * j: mu / math.factorial(2 * j) for j, mu in enumerate(mus, start=1)}
    logc = dict.fromkeys(coeffs, 0.0)
    power = dict(coeffs)  # (M-1)^r truncated to degree 2*maxn
    sign = 1.0
    for r in range(1, maxn + 1):
        for d, v in power.items():
            logc[d] += sign * v / r
        if r < maxn:
            nxt = {}
            for d1, v1 in power.items():
                for d2, v2 in coeffs.items():
                    if d1 + d2 <= 2 * maxn:
                        nxt[d1 + d2] = nxt.get(d1 + d2, 0.0) + v1 * v2
            power = nxt
        sign = -sign
    kappa_std = [logc[2 * j] * math.factorial(2 * j) for j in range(1, maxn + 1)]
    return [(-1.0) ** (j - 1) * kappa_std[j - 1] for j in range(1, maxn + 1)]


def mgf_matches_nc(u, k_modulus, law, rel_tol=1e-8):
    """|mgf(u) - nc(u, k)| / |nc(u, k)| for report entries."""
    nc = jacobi("nc", u, k_modulus).real
    return abs(mgf(u, law) - nc) / abs(nc), nc
