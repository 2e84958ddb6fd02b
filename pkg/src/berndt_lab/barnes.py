"""Double-sum zeta values: plain and alternating two-parameter lattice zetas,
their binomial-weighted (repeated-parameter) versions, Dirichlet-type
variants, Laplace lattice sums, and the alternating arctan lattice series.

Truncation ranks are chosen from closed-form integral-comparison tail
bounds, so every reported err_estimate is a rigorous bound on the absolute
truncation error (rounding aside).
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import AccuracyError, DomainError, UnsupportedChiError
from .numeric import gamma_real

_MAX_RANK = 1 << 18


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    err_estimate: float
    terms_used: int


# ---------------------------------------------------------------------------
# tail bounds
#
# Every bound starts from a linear lower bound on the modulus of the base,
#   |w + m a + n b| >= (omega + alpha m + beta n) / scale,
# and compares lattice tails with integrals.  Two shapes cover all the
# parameter sets used here:
#   axis bound  -- real parts (scale 1), or rotated parts Re+Im (scale sqrt 2)
#   pair bound  -- b = conj(a), w real: keeps |base|^2 = (omega+alpha u)^2
#                  + (gamma d)^2 with u = m+n, d = m-n, which is much sharper
#                  when the real part only grows along the diagonal.


def _sum_tail_1d(M, q, s, omega, alpha, lam):
    """Bound for sum_{m>M} weight(m) (omega + alpha m)^(-s), where the weight
    satisfies weight(m) <= lam^q (omega + alpha m)^q.  Needs s > q + 1."""
    if s <= q + 1:
        raise DomainError("tail bound needs s > weight degree + 1")
    c = omega + alpha * (M + 1)
    return lam**q * (c ** (q - s) + c ** (q - s + 1) / (alpha * (s - q - 1)))


def _tail_axis(M, s, omega, alpha, beta, p):
    """Tail of the C(m+p-1,m)C(n+p-1,n)-weighted double sum outside the
    square [0,M]^2 under the linear bound omega + alpha m + beta n."""
    q = p - 1
    fact = math.factorial(q)

    def one_side(al, be):
        lam_al = max(q / omega, 1.0 / al) if q else 1.0
        lam_be = max(q / omega, 1.0 / be) if q else 1.0
        # inner sum over all n >= 0:
        #   inner(c) <= c^-s + A c^(q-s) + B c^(q+1-s)
        A = lam_be**q / fact
        B = A / (be * (s - q - 1))
        t = _sum_tail_1d(M, q, s, omega, al, lam_al)
        t += A * _sum_tail_1d(M, q, s - q, omega, al, lam_al)
        t += B * _sum_tail_1d(M, q, s - q - 1, omega, al, lam_al)
        return t / fact

    return one_side(alpha, beta) + one_side(beta, alpha)


def _tail_pair(M, s, omega, alpha, gamma, p):
    """Tail bound for a = alpha + i gamma, b = conj(a), w = omega real."""
    q2 = 2 * p - 2
    fact2 = math.factorial(p - 1) ** 2
    cs = math.sqrt(math.pi) * gamma_real((s - 1) / 2.0) / gamma_real(s / 2.0)

    def shell(u):
        # bound for the whole diagonal u = m + n (d-sum replaced by integral)
        c = omega + alpha * u
        return (u / 2.0 + p - 1) ** q2 / fact2 * (cs / (2 * gamma) * c ** (1 - s) + c**-s)

    if shell(M + 2) > shell(M + 1):
        raise AccuracyError("pair tail bound not yet decreasing at this rank")
    total = shell(M + 1)
    cM = omega + alpha * (M + 1)
    for k in range(q2 + 1):
        coef = math.comb(q2, k) * (p - 1.0) ** (q2 - k) / (2 * alpha) ** k / fact2
        total += coef * (cs / (2 * gamma)) * cM ** (k + 2 - s) / (alpha * (s - k - 2))
        total += coef * cM ** (k + 1 - s) / (alpha * (s - k - 1))
    return total


def _is_conj_pair(w, a, b):
    return abs(b - a.conjugate()) <= 1e-14 * abs(a) and abs(w.imag) <= 1e-14 * abs(w)


def _tail_bound(M, s, w, a, b, p):
    """Best applicable rigorous bound for the tail outside [0,M]^2."""
    bounds = []
    if w.real > 0 and a.real > 0 and b.real > 0:
        bounds.append(_tail_axis(M, s, w.real, a.real, b.real, p))
    wx, ax, bx = w.real + w.imag, a.real + a.imag, b.real + b.imag
    if wx > 0 and ax > 0 and bx > 0 and min(w.real, a.real, b.real, w.imag, a.imag, b.imag) >= 0:
        bounds.append(2 ** (s / 2.0) * _tail_axis(M, s, wx, ax, bx, p))
    if _is_conj_pair(w, a, b) and a.real > 0 and a.imag != 0:
        try:
            bounds.append(_tail_pair(M, s, w.real, a.real, abs(a.imag), p))
        except AccuracyError:
            pass
    if not bounds:
        raise DomainError("no convergent tail bound for these parameters")
    return min(bounds)


# Euler-Maclaurin correction terms use B_2 .. B_18; the first omitted term
# bounds the remainder for real positive arguments.
_B_EVEN = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510, 43867 / 798)


def _hurwitz(sigma, x, N=32):
    """Hurwitz zeta sum_{r>=0} (x+r)^(-sigma) for real sigma > 1, x > 0,
    by Euler-Maclaurin.  Returns (value, error_bound)."""
    if not (sigma > 1 and x > 0):
        raise DomainError("need sigma > 1 and x > 0")
    N = max(N, int(sigma) + 8)
    total = sum((x + r) ** -sigma for r in range(N))
    t = x + N
    total += t ** (1 - sigma) / (sigma - 1) + 0.5 * t**-sigma
    poch = sigma  # (sigma)_(2j-1), running
    tpow = t ** (-sigma - 1)
    term = 0.0
    for j, b2j in enumerate(_B_EVEN, start=1):
        term = b2j / math.factorial(2 * j) * poch * tpow
        if j < len(_B_EVEN):
            total += term
            poch *= (sigma + 2 * j - 1) * (sigma + 2 * j)
            tpow /= t * t
    return total, abs(term)  # last term kept out of the sum bounds the rest


def _power_tail_1d(sigma, w, a, alternating):
    """(sum_{r>=0} (+-1)^r (w + a r)^(-sigma), error_bound) for w, a > 0."""
    if not alternating:
        v, e = _hurwitz(sigma, w / a)
        return a**-sigma * v, a**-sigma * e
    v_even, e1 = _hurwitz(sigma, w / (2 * a))
    v_odd, e2 = _hurwitz(sigma, (w + a) / (2 * a))
    scale = (2 * a) ** -sigma
    return scale * (v_even - v_odd), scale * (e1 + e2)


def _diag_sum(s, w, a, p, alternating):
    """Exact diagonal regrouping for b == a with everything real:

        sum_{m,n} W(m) W(n) (+-1)^(m+n) (w + a(m+n))^(-s)
            = sum_{r>=0} C(r+2p-1, r) (+-1)^r (w + a r)^(-s)

    (Vandermonde convolution of the binomial weights).  The weight is a
    degree 2p-1 polynomial in t = w + ar, so the sum reduces to Hurwitz
    zetas evaluated by Euler-Maclaurin."""
    q = 2 * p - 1
    # C(r+q, q) = prod_{i=1..q}(r + i)/q!; expand prod(t + (i a - w)) in t
    coeffs = [1.0]
    for i in range(1, q + 1):
        c = i * a - w
        new = [0.0] * (len(coeffs) + 1)
        for k, v in enumerate(coeffs):
            new[k] += c * v
            new[k + 1] += v
        coeffs = new
    scale = 1.0 / (a**q * math.factorial(q))
    total, err = 0.0, 0.0
    for k, ck in enumerate(coeffs):
        v, e = _power_tail_1d(s - k, w, a, alternating)
        total += scale * ck * v
        err += abs(scale * ck) * e
    return SeriesValue(complex(total), err + 4e-16 * abs(total), 64 * len(coeffs))


def _pick_rank(s, w, a, b, p, tol):
    M = 8
    while _tail_bound(M, s, w, a, b, p) > tol:
        M *= 2
        if M > _MAX_RANK:
            raise AccuracyError(f"tolerance {tol} unreachable within rank {_MAX_RANK}")
    lo, hi = M // 2, M
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if _tail_bound(mid, s, w, a, b, p) <= tol:
            hi = mid
        else:
            lo = mid
    return hi


def barnes_zeta2(s, w, a, b, alternating=False, tol=1e-12):
    """sum_{m,n>=0} (+-1)^(m+n) (w + m a + n b)^(-s), tail bound <= tol."""
    return barnes_zeta_repeated(s, w, a, b, 1, alternating, tol)


def barnes_zeta_repeated(s, w, a, b, p, alternating=False, tol=1e-12):
    """Repeated-parameter double-sum form: the 2p-fold sum over (a,b)
    repeated p times collapses to

        sum_{m,n>=0} C(m+p-1,m) C(n+p-1,n) (+-1)^(m+n) (w + m a + n b)^(-s).
    """
    if p < 1:
        raise DomainError("repeat count p must be >= 1")
    if not s > 2 * p:
        raise DomainError(f"need s > {2 * p} for convergence, got s = {s}")
    w, a, b = complex(w), complex(a), complex(b)
    if (
        a == b
        and a.imag == 0
        and w.imag == 0
        and a.real > 0
        and w.real > 0
    ):
        # equal real parameters: the 2-D tail only decays like M^(2p-s),
        # but the sum collapses exactly to a 1-D diagonal regrouping
        return _diag_sum(s, w.real, a.real, p, alternating)
    _tail_bound(8, s, w, a, b, p)  # raises DomainError if no strategy applies
    M = _pick_rank(s, w, a, b, p, tol)
    conj_sym = _is_conj_pair(w, a, b)
    val = _kernels.rect_sum(w, a, b, float(s), p, alternating, M, conj_sym)
    err = _tail_bound(M, s, w, a, b, p) + 4e-16 * abs(val)
    return SeriesValue(val, err, (M + 1) ** 2)


_CHI_FACTORS = {
    "geometric": (0, False),  # chi(n) = 1
    "alternating": (0, True),  # chi(n) = (-1)^n
    "linear": (1, False),  # chi(n) = n
    "alt-linear": (1, True),  # chi(n) = (-1)^n n
}


def dirichlet_Lchi(s, w, a, chi_hat, tol=1e-10):
    """Dirichlet-type multiple sum  sum chi(n_1..n_N) (w + sum n_j a_j)^(-s)
    for separable chi given by per-axis factor identifiers (keys of
    {geometric, alternating, linear, alt-linear})."""
    a = [complex(x) for x in a]
    w = complex(w)
    N = len(a)
    if len(chi_hat) != N:
        raise DomainError("one chi identifier per parameter required")
    try:
        degs = [_CHI_FACTORS[c][0] for c in chi_hat]
        alts = [_CHI_FACTORS[c][1] for c in chi_hat]
    except KeyError as exc:
        raise UnsupportedChiError(f"unknown chi identifier {exc.args[0]!r}") from None
    need = sum(d + 1 for d in degs)
    if not s > need:
        raise DomainError(f"need s > {need} for these factors, got s = {s}")
    if not all(z.real > 0 for z in [w] + a):
        raise DomainError("parameters must have positive real part")
    omega = w.real

    def marginalize(pairs, q, alpha):
        # apply sum_{n>=0} n^q (c + alpha n)^(-sigma) to every (coef, sigma)
        out = []
        for co, sg in pairs:
            if q == 0:
                out.append((co, sg))
                out.append((co / (alpha * (sg - 1)), sg - 1))
            else:
                out.append((co / alpha**q, sg - q))
                out.append((co / (alpha**q * alpha * (sg - q - 1)), sg - q - 1))
        return out

    def axis_tail(j, M):
        pairs = [(1.0, float(s))]
        for i in range(N):
            if i != j:
                pairs = marginalize(pairs, degs[i], a[i].real)
        tot = 0.0
        for co, sg in pairs:
            tot += co * _sum_tail_1d(M, degs[j], sg, omega, a[j].real, 1.0 / a[j].real)
        return tot

    ranks, err = [], 0.0
    for j in range(N):
        M = 8
        while axis_tail(j, M) > tol / N:
            M *= 2
            if M > _MAX_RANK:
                raise AccuracyError("axis rank limit exceeded")
        ranks.append(M)
        err += axis_tail(j, M)

    def chi_vals(j, M):
        n = np.arange(M + 1, dtype=np.float64)
        v = n ** degs[j] if degs[j] else np.ones(M + 1)
        if alts[j]:
            v = np.where(np.arange(M + 1) & 1, -v, v)
        return v

    if N == 2:
        M0, M1 = ranks
        c0, c1 = chi_vals(0, M0), chi_vals(1, M1)
        n1 = np.arange(M1 + 1)
        total = 0.0 + 0.0j
        for m in range(M0 + 1):
            z = w + m * a[0] + n1 * a[1]
            total += c0[m] * complex(np.dot(c1, z ** (-float(s))))
        return SeriesValue(total, err + 4e-16 * abs(total), (M0 + 1) * (M1 + 1))

    def rec(j, base):
        if j == N:
            return base ** (-float(s))
        tot = 0.0 + 0.0j
        for n in range(ranks[j] + 1):
            chi = (float(n) ** degs[j] if degs[j] else 1.0) * (-1.0 if (alts[j] and n & 1) else 1.0)
            if chi:
                tot += chi * rec(j + 1, base + n * a[j])
        return tot

    total = rec(0, w)
    terms = math.prod(M + 1 for M in ranks)
    return SeriesValue(total, err + 4e-16 * abs(total), terms)


def lattice_laplace_sum(F, a, b, alternating=False, M=64):
    """2 sum_{p,q=0}^{M} (+-1)^(p+q) F(a + p(a - i b) + q(a + i b)).

    Summed over expanding squares; the alternating case averages the last
    two square partial sums (the series is only conditionally convergent).
    """
    if M < 1:
        raise DomainError("M >= 1 required")
    u = a - 1j * b
    v = a + 1j * b
    prev = None
    tot = complex(F(complex(a)))
    for L in range(1, M + 1):
        sh = 0.0 + 0.0j
        for i in range(0, L + 1):
            t = complex(F(a + L * u + i * v))
            if i < L:
                t += complex(F(a + i * u + L * v))
            if alternating and ((L + i) & 1):
                t = -t
            sh += t
        prev, tot = tot, tot + sh
    if alternating:
        return tot + prev  # 2 * average of the last two square partials
    return 2.0 * tot


def arctan_quarter_pi(M):
    """Alternating arctan lattice sum

        sum' (-1)^(p+q+1) atan((p+q+1) / (p(p+1) + q(q+1)))

    over expanding squares 0 <= p,q <= L, (p,q) != (0,0).  The square
    partials S_L carry a parity oscillation on top of a smooth ~1/L drift,
    so the value returned is one Richardson step applied to the
    twice-averaged partial sums; measured error is ~3e-6 at M = 400.
    """
    if M < 2:
        raise DomainError("M >= 2 required")
    S = _kernels.arctan_partials(M)
    if M < 4:
        return 0.5 * (S[M] + S[M - 1])

    def t2(L):
        return 0.25 * (S[L] + 2.0 * S[L - 1] + S[L - 2])

    return M * t2(M) - (M - 1) * t2(M - 1)
