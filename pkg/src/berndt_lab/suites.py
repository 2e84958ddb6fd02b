"""Identity suites: every cross-check the lab can run, grouped by topic,
with machine-readable reports.

A report entry records both sides of one identity, absolute and relative
error, the tolerance and pass/fail policy ('rel' uses |lhs-rhs| <=
tol * max(1, |rhs|) so exact-zero targets stay meaningful; 'exact' means
the comparison ran in exact arithmetic), the method and evaluation cost.
Entry order is fixed by the suite definition and reports are byte-stable
for fixed inputs (nothing in the lab is randomized).
"""

import cmath
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import barnes, barnes_poly, lambert, moments, probmodel, quadrature
from ._kernels import BACKEND
from .elliptic import jacobi, modulus_from_k, nc_logderiv
from .errors import DomainError
from .exact import BivarPoly
from .numeric import euler_at_zero, gamma_real
from .quadrature import IntegralSpec

SUITE_NAMES = (
    "barnes",
    "kuznetsov-plus",
    "kuznetsov-minus",
    "lambert",
    "eisenstein",
    "symmetry",
    "congruence",
    "appendix",
    "probabilistic",
    "bridge",
)

LEMNISCATIC_K = 1.0 / math.sqrt(2.0)


def closed_form_quartic():
    """Gamma(1/4)^16/(3*2^14*pi^6) - Gamma(1/4)^8/(2^8*pi^2), assembled from
    the gamma routine at call time (no frozen decimal constants)."""
    g = gamma_real(0.25)
    return g**16 / (3 * 2**14 * math.pi**6) - g**8 / (2**8 * math.pi**2)


@dataclass
class SuiteReport:
    suite_id: str
    entries: list = field(default_factory=list)

    @property
    def all_pass(self):
        return all(e["pass"] for e in self.entries)

    def to_json(self):
        return json.dumps(
            {"suite_id": self.suite_id, "backend": BACKEND, "entries": self.entries},
            indent=2,
            default=_jsonable,
        )


def _jsonable(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return str(x)


def _num(x):
    if isinstance(x, Fraction):
        return float(x)
    if isinstance(x, complex):
        return x
    return float(x)


def _entry(identity_id, lhs, rhs, tolerance, policy="rel", params=None, method="", terms=0):
    exact = isinstance(lhs, (Fraction, bool, BivarPoly)) and isinstance(
        rhs, (Fraction, bool, int, BivarPoly)
    )
    if exact:
        ok = lhs == rhs
        abs_err = 0.0 if ok else float("nan")
        rel_err = abs_err
        policy = "exact"
    else:
        la, rb = _num(lhs), _num(rhs)
        abs_err = abs(la - rb)
        rel_err = abs_err / max(1.0, abs(rb))
        ok = (abs_err if policy == "abs" else rel_err) <= tolerance
    return {
        "identity_id": identity_id,
        "lhs": lhs if isinstance(lhs, (bool, int, float, complex)) else str(lhs),
        "rhs": rhs if isinstance(rhs, (bool, int, float, complex)) else str(rhs),
        "abs_err": abs_err,
        "rel_err": rel_err,
        "tolerance": tolerance,
        "policy": policy,
        "pass": bool(ok),
        "params": params or {},
        "method": method,
        "terms_or_evals": terms,
        "runtime_ms": 0.0,
    }


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    ms = round(1e3 * (time.perf_counter() - t0), 3)
    if isinstance(out, dict):
        out["runtime_ms"] = ms
        return [out]
    for e in out:
        e["runtime_ms"] = ms / max(1, len(out))
    return list(out)


def _run_entries(makers):
    threads = int(os.environ.get("BERNDT_LAB_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            groups = list(ex.map(_timed, makers))
    else:
        groups = [_timed(f) for f in makers]
    return [e for grp in groups for e in grp]


# --------------------------------------------------------------------------
# barnes suite


def _suite_barnes():
    closed = closed_form_quartic()
    makers = []

    def xu_zhao_quad():
        r = quadrature.berndt_integral(IntegralSpec("minus", 6, 2), tol=1e-9)
        return _entry(
            "quartic closed form vs quadrature",
            r.value,
            closed,
            1e-8,
            params={"s": 6, "p": 2},
            method="adaptive GK vs gamma closed form",
            terms=r.evaluations,
        )

    makers.append(xu_zhao_quad)

    def xu_zhao_zeta():
        z = barnes.barnes_zeta_repeated(6, 2.0, 1 + 1j, 1 - 1j, 2, tol=1.2e-10)
        return _entry(
            "quartic closed form vs 480 * repeated zeta",
            480.0 * z.value.real,
            closed,
            1e-8,
            params={"s": 6, "p": 2},
            method="weighted double sum",
            terms=z.terms_used,
        )

    makers.append(xu_zhao_zeta)

    for s, p in ((5, 1), (6, 2), (8, 3), (9, 3)):
        for sign in ("minus", "plus"):
            if (s, p) == (9, 3) and sign == "plus":
                continue

            def equiv(s=s, p=p, sign=sign):
                val = quadrature.berndt_integral(IntegralSpec(sign, s, p), tol=1e-8)
                ztol = 3e-8 * max(abs(val.value), 1e-3) / (2.0**p * gamma_real(s))
                z = barnes.barnes_zeta_repeated(
                    s, float(p), 1 + 1j, 1 - 1j, p, alternating=(sign == "plus"), tol=ztol
                )
                series = 2.0**p * gamma_real(s) * z.value.real
                return _entry(
                    f"integral = 2^p Gamma(s) zeta ({sign}, s={s}, p={p})",
                    val.value,
                    series,
                    1e-7,
                    params={"s": s, "p": p, "sign": sign},
                    method="adaptive GK vs weighted double sum",
                    terms=val.evaluations + z.terms_used,
                )

            makers.append(equiv)

    def arctan():
        v = barnes.arctan_quarter_pi(400)
        return _entry(
            "alternating arctan lattice sum = pi/4",
            v,
            math.pi / 4,
            1e-5,
            policy="abs",
            params={"M": 400},
            method="squares + averaging + Richardson",
            terms=401 * 401,
        )

    makers.append(arctan)

    def laplace_quartic():
        lat = barnes.lattice_laplace_sum(lambda z: 24.0 / z**5, 1.0, 1.0, False, M=400)
        quad = quadrature.berndt_integral(IntegralSpec("minus", 5, 1), tol=1e-10)
        return _entry(
            "Laplace lattice sum (f = x^4) vs quadrature",
            lat.real,
            quad.value,
            1e-6,
            params={"M": 400},
            method="lattice sum of the Laplace transform",
            terms=401 * 401,
        )

    makers.append(laplace_quartic)

    def laplace_cubic():
        lat = barnes.lattice_laplace_sum(lambda z: 2.0 / z**3, 1.0, 1.0, False, M=3000)
        quad = quadrature.berndt_integral(IntegralSpec("minus", 3, 1), tol=1e-10)
        return _entry(
            "Laplace lattice sum (f = x^2) vs quadrature",
            lat.real,
            quad.value,
            2e-3,
            params={"M": 3000},
            method="lattice sum of the Laplace transform (slow decay)",
            terms=3001 * 3001,
        )

    makers.append(laplace_cubic)

    def dirichlet_row1():
        d = barnes.dirichlet_Lchi(6, 1.0, (1.0, 1.0), ("geometric", "geometric"), tol=1e-11)
        z = barnes.barnes_zeta2(6, 1.0, 1.0, 1.0, tol=1e-11)
        return _entry(
            "chi = 1 multiple sum equals plain double zeta",
            d.value.real,
            z.value.real,
            1e-9,
            method="two summation routes",
            terms=d.terms_used + z.terms_used,
        )

    makers.append(dirichlet_row1)

    def dirichlet_row2():
        d = barnes.dirichlet_Lchi(6, 1.0, (1.0, 1.0), ("alternating", "alternating"), tol=1e-11)
        z = barnes.barnes_zeta2(6, 1.0, 1.0, 1.0, alternating=True, tol=1e-11)
        return _entry(
            "alternating chi equals alternating double zeta",
            d.value.real,
            z.value.real,
            1e-9,
            method="two summation routes",
            terms=d.terms_used + z.terms_used,
        )

    makers.append(dirichlet_row2)

    def dirichlet_row3():
        d = barnes.dirichlet_Lchi(6, 1.0, (1.0, 1.0), ("linear", "linear"), tol=1e-11)
        q = quadrature.integrate_halfline(
            lambda x: x**5 * np.exp(-x) / (2.0 * np.sinh(x / 2.0)) ** 4, 1e-11
        )
        return _entry(
            "chi = n1 n2 sum equals its kernel integral / Gamma(s)",
            d.value.real,
            q.value / gamma_real(6),
            1e-8,
            method="multiple sum vs quadrature",
            terms=d.terms_used + q.evaluations,
        )

    makers.append(dirichlet_row3)

    def dirichlet_row9():
        d = barnes.dirichlet_Lchi(6, 1.0, (1.0, 1.0), ("alt-linear", "alt-linear"), tol=1e-11)
        q = quadrature.integrate_halfline(
            lambda x: x**5 * np.exp(-x) / (2.0 * np.cosh(x / 2.0)) ** 4, 1e-11
        )
        return _entry(
            "alternating-linear chi equals its kernel integral / Gamma(s)",
            d.value.real,
            q.value / gamma_real(6),
            1e-8,
            method="multiple sum vs quadrature",
            terms=d.terms_used + q.evaluations,
        )

    makers.append(dirichlet_row9)
    return makers


# --------------------------------------------------------------------------
# moment suites


_MODULI = ((0.5, Fraction(1, 4)), (LEMNISCATIC_K, Fraction(1, 2)))


def _suite_kuznetsov(family):
    makers = []
    exact_fn = moments.moment_plus_exact if family == "plus" else moments.moment_minus_exact

    for kval, k2 in _MODULI:
        for n in range(5):

            def quad_vs_exact(n=n, kval=kval, k2=k2):
                m = modulus_from_k(kval)
                exact = exact_fn(n, k2)
                r = quadrature.kuznetsov_moment_quad(
                    family, n, m, tol=float(1e-9 * max(1, abs(exact)))
                )
                small = abs(exact) < 1
                return _entry(
                    f"{family}-moment n={n} quadrature vs exact (k={kval:.4f})",
                    r.value,
                    exact,
                    1e-8 if small else 1e-6,
                    policy="abs" if small else "rel",
                    params={"n": n, "k": kval},
                    method="whole-line reduction quadrature vs polynomial route",
                    terms=r.evaluations,
                )

            makers.append(quad_vs_exact)

    if family == "plus":

        def genfun():
            m = modulus_from_k(0.5)
            u = m.bigK / 3.0
            r = quadrature.genfun_quad("plus", u, m, tol=1e-9)
            rhs = 2.0 * nc_logderiv(u, m).real
            return _entry(
                "plus generating integral = 2 sn dn / cn at u = K/3",
                r.value.real,
                rhs,
                1e-7,
                params={"u": "K/3", "k": 0.5},
                method="quadrature vs theta quotients",
                terms=r.evaluations,
            )

        makers.append(genfun)

        def recur_coherence():
            ok = all(
                moments.moment_plus_recur(n, k2) == moments.moment_plus_exact(n, k2)
                for k2 in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 7))
                for n in range(13)
            )
            return _entry(
                "plus recurrences reproduce polynomial route (n <= 12)",
                ok,
                True,
                0.0,
                method="exact dual recurrence",
            )

        makers.append(recur_coherence)

        def poly_alt():
            ok = all(moments.p_poly(n) == moments.p_poly_alt(n) for n in range(21))
            return _entry(
                "triple-convolution and energy recurrences agree (n <= 20)",
                ok,
                True,
                0.0,
                method="exact polynomial comparison",
            )

        makers.append(poly_alt)

        def initial_values():
            ok = True
            for k2 in (Fraction(1, 4), Fraction(3, 7)):
                i1 = moments.moment_plus_exact(1, k2)
                i2 = moments.moment_plus_exact(2, k2)
                for n in range(9):
                    v = Fraction(-2) ** n * moments.p_poly(n).eval_rational(-i1 / 2, i2 / 4)
                    ok = ok and v == moments.moment_plus_exact(n, k2)
            return _entry(
                "plus moments are polynomial in the initial values",
                ok,
                True,
                0.0,
                method="exact evaluation",
            )

        makers.append(initial_values)
    else:

        def i0_three_moduli():
            ok = all(
                moments.moment_minus_exact(0, k2) == -4
                for k2 in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 7))
            )
            return _entry(
                "I_0(-) = -4 at three moduli (exact)", ok, True, 0.0, method="polynomial route"
            )

        makers.append(i0_three_moduli)

        def genfun():
            m = modulus_from_k(0.5)
            u = m.bigK / 5.0
            r = quadrature.genfun_quad("minus", u, m, tol=1e-9)
            sn = jacobi("sn", u, m)
            cd = jacobi("cd", u, m)
            sd2 = jacobi("sd", 2 * u, m)
            rhs = (-8.0 * sn * sn / (cd * cd * sd2)).real
            return _entry(
                "minus generating integral = -8 sn^2/(cd^2 sd(2u)) at u = K/5",
                r.value.real,
                rhs,
                1e-7,
                params={"u": "K/5", "k": 0.5},
                method="quadrature vs theta quotients",
                terms=r.evaluations,
            )

        makers.append(genfun)

        def recur_coherence():
            ok = all(
                moments.moment_minus_recur(n, k2) == moments.moment_minus_exact(n, k2)
                for k2 in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 7))
                for n in range(13)
            )
            return _entry(
                "minus recurrence reproduces polynomial route (n <= 12)",
                ok,
                True,
                0.0,
                method="exact recurrence",
            )

        makers.append(recur_coherence)

        def convolution():
            ok = all(moments.convolution_identity_check(n) for n in range(11))
            return _entry(
                "binomial convolution identity (n <= 10)",
                ok,
                True,
                0.0,
                method="exact polynomial identity",
            )

        makers.append(convolution)

        def cross():
            ok = all(moments.cross_identity_check(n) for n in range(11))
            return _entry(
                "weighted cross identity sums to zero (n <= 10)",
                ok,
                True,
                0.0,
                method="exact polynomial identity",
            )

        makers.append(cross)

        def initial_values():
            ok = True
            for k2 in (Fraction(1, 4), Fraction(3, 7)):
                i1 = moments.moment_minus_exact(1, k2)
                i2 = moments.moment_minus_exact(2, k2)
                for n in range(9):
                    v = Fraction(-2) ** (n + 1) * moments.q_poly(n).eval_rational(
                        i1 / 32, (15 - i2 / 32) / 8
                    )
                    ok = ok and v == moments.moment_minus_exact(n, k2)
            return _entry(
                "minus moments are polynomial in the initial values",
                ok,
                True,
                0.0,
                method="exact evaluation",
            )

        makers.append(initial_values)

    return makers


# --------------------------------------------------------------------------
# lambert / eisenstein / symmetry


def _suite_lambert():
    makers = []
    for kval, k2 in _MODULI + ((0.8, Fraction(16, 25)),):
        for n in range(5):

            def lam_plus(n=n, kval=kval, k2=k2):
                m = modulus_from_k(kval)
                v = lambert.moment_plus_lambert(n + 1, m)
                return _entry(
                    f"plus-moment n={n} Lambert route (k={kval:.4f})",
                    v,
                    moments.moment_plus_exact(n, k2),
                    1e-9,
                    params={"n": n, "k": kval},
                    method="Lambert series + Euler term",
                )

            makers.append(lam_plus)

            def lam_minus(n=n, kval=kval, k2=k2):
                m = modulus_from_k(kval)
                v = lambert.moment_minus_lambert(n, m)
                return _entry(
                    f"minus-moment n={n} Lambert route (k={kval:.4f})",
                    v,
                    moments.moment_minus_exact(n, k2),
                    1e-9,
                    params={"n": n, "k": kval},
                    method="Lambert series + Euler term",
                )

            makers.append(lam_minus)

    def sinh_identity():
        m = modulus_from_k(0.6)
        a = lambert.lambert_sum(5, m.nome, "even_den")
        b = lambert.lambert_sum(5, m.nome, "sinh")
        return _entry(
            "2 sum n^5 q^n/(1-q^2n) = sum n^5/sinh(pi n c)",
            2.0 * a.value,
            b.value,
            1e-12,
            params={"k": 0.6, "exp": 5},
            method="two Lambert evaluation paths",
            terms=a.terms_used + b.terms_used,
        )

    makers.append(sinh_identity)

    def lemniscatic_12():
        m = modulus_from_k(LEMNISCATIC_K)
        s = lambert.lambert_sum(3, m.nome, "plus_alt")
        v = (math.pi / m.bigK) ** 4 * (-0.5 * float(euler_at_zero(3)) + 2.0 * s.value)
        return _entry(
            "lemniscatic Lambert form of the n=2 plus-moment = 12",
            v,
            12.0,
            1e-10,
            method="Lambert series",
            terms=s.terms_used,
        )

    makers.append(lemniscatic_12)
    return makers


def _suite_eisenstein():
    makers = []
    for kval, k2 in _MODULI:
        for n in range(5):

            def eis_plus(n=n, kval=kval, k2=k2):
                m = modulus_from_k(kval)
                M = 400 if n == 0 else 200
                v = lambert.eisenstein_plus(n, m, lambert.LatticeWindow(M))
                return _entry(
                    f"plus-moment n={n} lattice route (k={kval:.4f})",
                    v,
                    moments.moment_plus_exact(n, k2),
                    1e-4 if n == 0 else 1e-5,
                    params={"n": n, "k": kval, "M": M},
                    method="full-lattice power sums",
                    terms=2 * (2 * M + 1) ** 2,
                )

            makers.append(eis_plus)

            def eis_minus(n=n, kval=kval, k2=k2):
                m = modulus_from_k(kval)
                v = lambert.eisenstein_minus(n, m, lambert.LatticeWindow(200))
                return _entry(
                    f"minus-moment n={n} lattice route (k={kval:.4f})",
                    v,
                    moments.moment_minus_exact(n, k2),
                    1e-5,
                    params={"n": n, "k": kval, "M": 200},
                    method="full-lattice power sum",
                    terms=401 * 401,
                )

            makers.append(eis_minus)
    return makers


def _suite_symmetry():
    makers = []
    for kval, frac in ((0.5, 3), (0.7, 4)):

        def sym(kval=kval, frac=frac):
            m = modulus_from_k(kval)
            entries = quadrature.symmetry_suite(m.bigK / frac, m, tol=1e-8)
            return [
                _entry(
                    f"{e['identity']} (k={kval}, u=K/{frac})",
                    e["lhs"],
                    e["rhs"],
                    1e-6,
                    policy="abs",
                    params={"k": kval, "u": f"K/{frac}"},
                    method=e["method"],
                )
                for e in entries
            ]

        makers.append(sym)
    return makers


def _suite_congruence(max_n=40):
    makers = []
    for k2 in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 7)):

        def cong(k2=k2):
            out = []
            plus_seq = moments.moment_plus_seq(3 * max_n + 1, k2)
            minus_seq = moments.moment_minus_seq(2 * max_n, k2) if k2 == Fraction(1, 2) else None
            ok10 = all(
                c.ok
                for n in range(max_n + 1)
                for c in moments.congruence_mod10(n, k2, _plus_seq=plus_seq, _minus_seq=minus_seq)
            )
            out.append(
                _entry(
                    f"mod-10 residues n <= {max_n} (k^2 = {k2})",
                    ok10,
                    True,
                    0.0,
                    params={"k2": str(k2)},
                    method="exact integer residues",
                )
            )
            ok3 = all(
                moments.congruence_mod3(n, k2, _plus_seq=plus_seq).ok for n in range(max_n + 1)
            )
            out.append(
                _entry(
                    f"mod-3 residues n <= {max_n} (k^2 = {k2})",
                    ok3,
                    True,
                    0.0,
                    params={"k2": str(k2)},
                    method="exact integer residues",
                )
            )
            return out

        makers.append(cong)
    return makers


# --------------------------------------------------------------------------
# appendix / probabilistic / bridge


def _series_quotient_oracle(numer_x2, order):
    """Exact Taylor coefficients of x^2/(cosh x - cos x) (numer_x2=True) or
    1/(cosh x + cos x) (False) by direct series reciprocation; independent
    of the Bernoulli/Euler product route."""
    den = [Fraction(0)] * (order + 1)
    for m in range(0, order // 2 + 1):
        if m % 2 == 0:
            den[2 * m] = Fraction(2, math.factorial(2 * m + 2 if numer_x2 else 2 * m))
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / den[0]
    for n in range(1, order + 1):
        inv[n] = -sum(den[j] * inv[n - j] for j in range(1, n + 1)) / den[0]
    return inv


def _suite_appendix():
    makers = []
    for p, s in ((1, 4), (1, 5.5), (2, 6)):

        def equiv(p=p, s=s):
            e = barnes_poly.appendix_equivalence(s, p, tol=1e-10)
            return _entry(
                f"rotated-parameter zeta equivalence (p={p}, s={s})",
                e["lhs"],
                e["rhs"],
                1e-10,
                policy="abs",
                params={"p": p, "s": s},
                method="matched-square double sums",
                terms=e["terms"],
            )

        makers.append(equiv)

    def rotated_closed_form():
        z = barnes.barnes_zeta_repeated(6, 1 + 1j, 1.0, 1j, 2, tol=2e-8)
        lhs = (4.0 * cmath.exp(3.0 * cmath.log(0.5j)) * gamma_real(6) * z.value).real
        return _entry(
            "rotated parameterization reproduces the quartic closed form",
            lhs,
            closed_form_quartic(),
            5e-6,
            params={"p": 2, "s": 6},
            method="rotated-parameter double sum",
            terms=z.terms_used,
        )

    makers.append(rotated_closed_form)

    def lemma_bernoulli():
        oracle = _series_quotient_oracle(True, 12)
        ok = all(
            barnes_poly.lemma_g1(j) == oracle[j] * math.factorial(j) for j in range(13)
        )
        return _entry(
            "kernel expansion via Bernoulli product (order <= 12)",
            ok,
            True,
            0.0,
            method="exact series reciprocation oracle",
        )

    makers.append(lemma_bernoulli)

    def lemma_euler():
        oracle = _series_quotient_oracle(False, 12)
        ok = all(
            barnes_poly.lemma_g2(2 * j) == oracle[2 * j] * math.factorial(2 * j) * (-1) ** j
            for j in range(7)
        )
        return _entry(
            "kernel expansion via Euler product (order <= 12)",
            ok,
            True,
            0.0,
            method="exact series reciprocation oracle",
        )

    makers.append(lemma_euler)

    def continuation_real():
        ok = all(
            barnes_poly.continuation_neg(s, p).is_real()
            for p in (1, 2)
            for s in range(2 * p + 1, 9)
        )
        return _entry(
            "continued values at negative integers are exactly real",
            ok,
            True,
            0.0,
            method="exact Gaussian-rational series",
        )

    makers.append(continuation_real)
    return makers


def _suite_probabilistic():
    makers = []
    for kval, k2, u in ((0.5, Fraction(1, 4), 0.2), (LEMNISCATIC_K, Fraction(1, 2), 0.1)):

        def prob(kval=kval, k2=k2, u=u):
            m = modulus_from_k(kval)
            law = probmodel.build_law(m, N=80)
            out = [
                _entry(
                    f"law normalization under recorded nome (k={kval:.4f})",
                    law.normalization_defect,
                    0.0,
                    1e-10,
                    policy="abs",
                    params={
                        "k": kval,
                        "nome": law.nome_label,
                        "rejected_defect": law.rejected_defect,
                    },
                    method="weight sum",
                )
            ]
            rel, nc = probmodel.mgf_matches_nc(u, m, law)
            out.append(
                _entry(
                    f"mgf(u={u}) matches nc (k={kval:.4f})",
                    probmodel.mgf(u, law),
                    nc,
                    1e-8,
                    params={"u": u, "k": kval},
                    method="weighted cosh series vs theta quotient",
                )
            )
            cums = probmodel.cumulants(law, maxn=2)
            i0 = moments.moment_plus_exact(0, k2)
            i1 = moments.moment_plus_exact(1, k2)
            out.append(
                _entry(
                    f"second cumulant equals n=0 plus-moment (k={kval:.4f})",
                    cums[0],
                    i0,
                    1e-6,
                    params={"k": kval},
                    method="series log of moment series",
                )
            )
            out.append(
                _entry(
                    f"fourth cumulant equals n=1 plus-moment (k={kval:.4f})",
                    cums[1],
                    i1,
                    1e-6,
                    policy="abs" if abs(i1) < 1 else "rel",
                    params={"k": kval},
                    method="series log of moment series",
                )
            )
            return out

        makers.append(prob)
    return makers


def _suite_bridge():
    makers = []
    for kval, k2 in ((0.5, Fraction(1, 4)), (0.6, Fraction(9, 25))):
        for n in range(3):

            def wbridge(n=n, kval=kval, k2=k2):
                m = modulus_from_k(kval)
                v = lambert.weierstrass_bridge(n, m, lambert.LatticeWindow(320))
                exact = 2 * moments.moment_plus_exact(n + 1, k2) - moments.moment_minus_exact(
                    n, k2
                )
                return _entry(
                    f"lattice bridge = 2 I_(n+1)(+) - I_n(-) (n={n}, k={kval})",
                    v,
                    exact,
                    1e-6,
                    params={"n": n, "k": kval, "M": 320},
                    method="quarter-lattice sum vs exact moments",
                    terms=320 * 320,
                )

            makers.append(wbridge)

    for kval, k2 in _MODULI:
        for n in range(2):

            def concl(n=n, kval=kval, k2=k2):
                m = modulus_from_k(kval)
                q = quadrature.conclusion_bridge_quad(n, m, tol=1e-9)
                lam = (
                    4.0
                    * (math.pi / m.bigK) ** (2 * n + 4)
                    * lambert.lambert_sum(2 * n + 3, m.nome, "even_den").value
                )
                half = (
                    2 * moments.moment_plus_exact(n + 1, k2) - moments.moment_minus_exact(n, k2)
                ) / 2
                return [
                    _entry(
                        f"squared-kernel integral = even-denominator Lambert form (n={n}, k={kval:.4f})",
                        q.value,
                        lam,
                        1e-7,
                        params={"n": n, "k": kval},
                        method="quadrature vs Lambert series",
                        terms=q.evaluations,
                    ),
                    _entry(
                        f"squared-kernel integral = half the moment bridge (n={n}, k={kval:.4f})",
                        q.value,
                        half,
                        1e-7,
                        params={"n": n, "k": kval},
                        method="quadrature vs exact moments",
                        terms=q.evaluations,
                    ),
                ]

            makers.append(concl)
    return makers


_SUITE_BUILDERS = {
    "barnes": _suite_barnes,
    "kuznetsov-plus": lambda: _suite_kuznetsov("plus"),
    "kuznetsov-minus": lambda: _suite_kuznetsov("minus"),
    "lambert": _suite_lambert,
    "eisenstein": _suite_eisenstein,
    "symmetry": _suite_symmetry,
    "congruence": _suite_congruence,
    "appendix": _suite_appendix,
    "probabilistic": _suite_probabilistic,
    "bridge": _suite_bridge,
}


def run_suite(name, max_n=40):
    """Run one named suite (or 'all'); returns a SuiteReport."""
    if name == "all":
        report = SuiteReport("all")
        for sub in SUITE_NAMES:
            report.entries.extend(run_suite(sub, max_n=max_n).entries)
        return report
    if name not in _SUITE_BUILDERS:
        raise DomainError(f"unknown suite {name!r}")
    makers = _suite_congruence(max_n) if name == "congruence" else _SUITE_BUILDERS[name]()
    return SuiteReport(name, _run_entries(makers))
