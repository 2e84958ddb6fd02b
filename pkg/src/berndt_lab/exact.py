"""Exact arithmetic substrate: Gaussian rationals and sparse bivariate
polynomials over arbitrary-precision integers.

Plain `int` and `fractions.Fraction` serve as the big-integer and rational
types; the two classes here add what the standard library lacks.
"""

import json
from fractions import Fraction


class GaussRational:
    """Element of Q(i) with exact field arithmetic."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        if isinstance(x, complex):
            raise TypeError("no implicit float -> GaussRational conversion")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return GaussRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("GaussRational powers take nonnegative ints")
        acc = GaussRational(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    def is_real(self):
        return self.im == 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussRational({self.re})"
        return f"GaussRational({self.re}, {self.im})"


GAUSS_I = GaussRational(0, 1)
GAUSS_ONE = GaussRational(1, 0)


class BivarPoly:
    """Sparse bivariate polynomial with integer coefficients.

    Stored as {(deg_x, deg_y): coeff}; zero coefficients are never kept.
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for key, c in (terms or {}).items():
            if c:
                i, j = key
                if i < 0 or j < 0:
                    raise ValueError("negative degree")
                t[(int(i), int(j))] = c
        self.terms = t

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return BivarPoly(t)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        t = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                key = (i + k, j + l)
                s = t.get(key, 0) + c * d
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        return BivarPoly(t)

    def scale(self, c):
        if not c:
            return BivarPoly()
        return BivarPoly({k: c * v for k, v in self.terms.items()})

    def exact_div(self, d):
        """Divide every coefficient by d, requiring exact divisibility."""
        out = {}
        for k, v in self.terms.items():
            q, r = divmod(v, d)
            if r:
                raise ValueError(f"coefficient {v} not divisible by {d}")
            out[k] = q
        return BivarPoly(out)

    def eval_rational(self, x, y):
        """Exact evaluation at rational (x, y), Horner in x per y-band."""
        x = Fraction(x)
        y = Fraction(y)
        by_j = {}
        for (i, j), c in self.terms.items():
            by_j.setdefault(j, []).append((i, c))
        total = Fraction(0)
        for j, band in by_j.items():
            band.sort(reverse=True)
            acc = Fraction(0)
            prev = None
            for i, c in band:
                if prev is None:
                    acc = Fraction(c)
                else:
                    acc = acc * x ** (prev - i) + c
                prev = i
            total += acc * x ** prev * y**j
        return total

    def deg_x(self):
        return max((i for i, _ in self.terms), default=0)

    def deg_y(self):
        return max((j for _, j in self.terms), default=0)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_json_dict(self):
        """{"terms": [{"dx":…, "dy":…, "c": "<decimal>"}]} with fixed order."""
        items = sorted(self.terms.items())
        return {"terms": [{"dx": i, "dy": j, "c": str(c)} for (i, j), c in items]}

    @classmethod
    def from_json_dict(cls, d):
        return cls({(t["dx"], t["dy"]): int(t["c"]) for t in d["terms"]})

    def __repr__(self):
        if not self.terms:
            return "BivarPoly(0)"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mon = "".join(
                [f"x^{i}" if i > 1 else "x" * (i == 1), f"y^{j}" if j > 1 else "y" * (j == 1)]
            )
            parts.append(f"{c}{mon}" if mon else f"{c}")
        return "BivarPoly(" + " + ".join(parts) + ")"


def poly_add(P, Q):
    return P + Q


def poly_mul(P, Q):
    return P * Q


def poly_scale(P, c):
    return P.scale(c)


def poly_eval_rational(P, x, y):
    return P.eval_rational(x, y)


def polys_to_json(polys, names):
    """Serialize a list of polynomials under the given names."""
    return json.dumps({name: P.to_json_dict() for name, P in zip(names, polys)}, indent=2)
