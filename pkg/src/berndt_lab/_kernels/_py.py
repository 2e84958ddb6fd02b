"""Numpy implementations of the hot summation kernels.

These are the fallback backend; `berndt_lab._kernels._core` is the compiled
(Cython) twin with identical signatures and summation order at the shell /
row level, so the two backends agree to rounding.
"""

import numpy as np


def _pow_neg(z, s):
    """z**(-s) elementwise; fast integer-exponent path via squaring."""
    if float(s).is_integer():
        e = int(s)
        # z^-e = conj(z)^e / |z|^(2e)
        w = np.conj(z)
        acc = np.ones_like(w)
        k = e
        while k:
            if k & 1:
                acc = acc * w
            k >>= 1
            if k:
                w = w * w
        r2 = (z.real * z.real + z.imag * z.imag) ** e
        return acc / r2
    r2 = z.real * z.real + z.imag * z.imag
    th = np.arctan2(z.imag, z.real)
    return np.exp(-0.5 * s * np.log(r2)) * np.exp(-1j * s * th)


def _weights(M, p):
    """C(m+p-1, m) for m = 0..M as float64."""
    m = np.arange(M + 1, dtype=np.float64)
    w = np.ones(M + 1)
    for i in range(1, p):
        w *= (m + i) / i
    return w


def rect_sum(w, a, b, s, p, alternating, M, conj_sym, block=2048):
    """Sum of C(m+p-1,m) C(n+p-1,n) (+-1)^(m+n) (w + m a + n b)^(-s)
    over the square 0 <= m, n <= M.

    conj_sym requires b == conj(a) and w real; then (m,n) and (n,m) terms
    are conjugate and only the upper triangle is evaluated.
    """
    wt = _weights(M, p)
    total = 0.0 + 0.0j
    for m0 in range(0, M + 1, block):
        m = np.arange(m0, min(m0 + block, M + 1))
        for n0 in range(0, M + 1, block):
            if conj_sym and n0 + block <= m0:
                continue
            n = np.arange(n0, min(n0 + block, M + 1))
            mm = m[:, None]
            nn = n[None, :]
            z = (w + mm * a) + nn * b
            t = _pow_neg(z, s) * (wt[m][:, None] * wt[n][None, :])
            if alternating:
                t = np.where((mm + nn) & 1, -t, t)
            if conj_sym:
                fac = np.where(nn > mm, 2.0, np.where(nn == mm, 1.0, 0.0))
                total += complex(np.sum(t.real * fac))
            else:
                total += complex(np.sum(t))
    if conj_sym:
        return complex(total.real, 0.0)
    return total


def eis_partials(am, an, c, e, M):
    """Square partial sums S_L of sum (c + m am + n an)^(-e) over the full
    lattice max(|m|,|n|) <= L, for L = 0..M.  e is an integer >= 2.

    Returns a complex array of length M+1; callers never place a lattice
    zero of the base inside the window.
    """
    out = np.empty(M + 1, dtype=complex)
    tot = complex(_pow_neg(np.asarray(c, dtype=complex), e))
    out[0] = tot
    for L in range(1, M + 1):
        side = np.arange(-L, L + 1)
        edge = np.concatenate(
            [
                c + L * am + side * an,  # m = +L
                c - L * am + side * an,  # m = -L
                c + side[1:-1] * am + L * an,  # n = +L, corners done
                c + side[1:-1] * am - L * an,  # n = -L
            ]
        )
        tot += complex(np.sum(_pow_neg(edge, e)))
        out[L] = tot
    return out


def quad1_sum(a, b, c, e, M):
    """Sum of (c + m a + n b)^(-e) over 1 <= m, n <= M (integer e >= 2)."""
    n = np.arange(1, M + 1)
    tot = 0.0 + 0.0j
    for m in range(1, M + 1):
        tot += complex(np.sum(_pow_neg(c + m * a + n * b, e)))
    return tot


def arctan_partials(M):
    """Square partial sums of the alternating arctan lattice series

        sum' (-1)^(p+q+1) atan((p+q+1) / (p(p+1) + q(q+1)))

    over 0 <= p,q <= L, (p,q) != (0,0), for L = 0..M."""
    out = np.empty(M + 1)
    out[0] = 0.0
    tot = 0.0
    for L in range(1, M + 1):
        p = np.arange(0, L + 1, dtype=np.float64)
        sgn = np.where((p + L) % 2 == 0, -1.0, 1.0)
        tot += float(np.sum(sgn * np.arctan((p + L + 1) / (p * (p + 1) + L * (L + 1)))))
        q = np.arange(0, L, dtype=np.float64)
        sgn = np.where((q + L) % 2 == 0, -1.0, 1.0)
        tot += float(np.sum(sgn * np.arctan((q + L + 1) / (q * (q + 1) + L * (L + 1)))))
        out[L] = tot
    return out
