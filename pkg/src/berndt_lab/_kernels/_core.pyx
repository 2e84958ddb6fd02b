# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the summation kernels in ``_py``.

Same signatures and the same shell/row accumulation order, so results agree
with the numpy backend to rounding.
"""

from libc.math cimport atan, atan2, cos, exp, log, sin


cdef inline double complex _ipow_neg(double complex z, long e) noexcept:
    # z**(-e) for integer e >= 1, by binary exponentiation of 1/z
    cdef double complex w = 1.0 / z
    cdef double complex acc = 1.0
    cdef long k = e
    while k:
        if k & 1:
            acc = acc * w
        k >>= 1
        if k:
            w = w * w
    return acc


cdef inline double complex _fpow_neg(double complex z, double s) noexcept:
    cdef double r2 = z.real * z.real + z.imag * z.imag
    cdef double th = atan2(z.imag, z.real)
    cdef double mod = exp(-0.5 * s * log(r2))
    return mod * (cos(s * th) - 1j * sin(s * th))


def rect_sum(double complex w, double complex a, double complex b,
             double s, long p, bint alternating, long M, bint conj_sym,
             long block=2048):
    cdef long m, n, i, e
    cdef bint int_s = (s == <double>(<long>s))
    cdef double wm, wn
    cdef double complex z, t, row
    cdef double complex total = 0.0
    cdef double tot_re = 0.0
    e = <long>s
    wm = 1.0
    for m in range(M + 1):
        row = 0.0
        if conj_sym:
            wn = wm
            for n in range(m, M + 1):
                z = w + m * a + n * b
                t = _ipow_neg(z, e) if int_s else _fpow_neg(z, s)
                t = t * (wm * wn)
                if alternating and ((m + n) & 1):
                    t = -t
                if n == m:
                    row = row + 0.5 * t
                else:
                    row = row + t
                wn = wn * (n + p) / (n + 1.0)
            tot_re += 2.0 * row.real
        else:
            wn = 1.0
            for n in range(M + 1):
                z = w + m * a + n * b
                t = _ipow_neg(z, e) if int_s else _fpow_neg(z, s)
                t = t * (wm * wn)
                if alternating and ((m + n) & 1):
                    t = -t
                row = row + t
                wn = wn * (n + p) / (n + 1.0)
            total = total + row
        wm = wm * (m + p) / (m + 1.0)
    if conj_sym:
        return complex(tot_re, 0.0)
    return complex(total.real, total.imag)


def eis_partials(double complex am, double complex an, double complex c,
                 long e, long M):
    cdef long L, i
    cdef double complex tot, sh
    cdef list out = []
    tot = _ipow_neg(c, e)
    out.append(complex(tot.real, tot.imag))
    for L in range(1, M + 1):
        sh = 0.0
        for i in range(-L, L + 1):
            sh = sh + _ipow_neg(c + L * am + i * an, e)
            sh = sh + _ipow_neg(c - L * am + i * an, e)
        for i in range(-L + 1, L):
            sh = sh + _ipow_neg(c + i * am + L * an, e)
            sh = sh + _ipow_neg(c + i * am - L * an, e)
        tot = tot + sh
        out.append(complex(tot.real, tot.imag))
    return out


def quad1_sum(double complex a, double complex b, double complex c,
              long e, long M):
    cdef long m, n
    cdef double complex row, tot = 0.0
    for m in range(1, M + 1):
        row = 0.0
        for n in range(1, M + 1):
            row = row + _ipow_neg(c + m * a + n * b, e)
        tot = tot + row
    return complex(tot.real, tot.imag)


def arctan_partials(long M):
    cdef long L, p, q
    cdef double tot = 0.0, sh, v
    cdef list out = [0.0]
    for L in range(1, M + 1):
        sh = 0.0
        for p in range(0, L + 1):
            v = atan((p + L + 1.0) / (p * (p + 1.0) + L * (L + 1.0)))
            sh += -v if ((p + L) & 1) == 0 else v
        for q in range(0, L):
            v = atan((q + L + 1.0) / (q * (q + 1.0) + L * (L + 1.0)))
            sh += -v if ((q + L) & 1) == 0 else v
        tot += sh
        out.append(tot)
    return out
