"""Truncated power series in one variable with Laurent coefficients."""

from fractions import Fraction

from .poly import LaurentPoly
from .ratfunc import RatFunc


class NotExpandable(ValueError):
    pass


class TruncSeries:
    """sum_{i <= cap} coeffs[i] * var**i, exact up to and including cap."""

    __slots__ = ("var", "cap", "coeffs")

    def __init__(self, var, cap, coeffs):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        coeffs = [c if isinstance(c, LaurentPoly) else LaurentPoly.const(c) for c in coeffs]
        coeffs = coeffs[:cap + 1] + [LaurentPoly.const(0)] * (cap + 1 - len(coeffs))
        for c in coeffs:
            if var in c.variables:
                raise ValueError(f"coefficient depends on the series variable {var}")
        self.var, self.cap, self.coeffs = var, cap, tuple(coeffs)

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i <= self.cap else LaurentPoly.const(0)

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if other.var != self.var:
            raise ValueError("series in different variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        cap = min(self.cap, other.cap)
        return TruncSeries(self.var, cap, [self.coeffs[i] + other.coeffs[i] for i in range(cap + 1)])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        cap = min(self.cap, other.cap)
        return TruncSeries(self.var, cap, [self.coeffs[i] - other.coeffs[i] for i in range(cap + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return TruncSeries(self.var, self.cap, [c * other for c in self.coeffs])
        other = self._check(other)
        if other is NotImplemented:
            return other
        cap = min(self.cap, other.cap)
        out = []
        for i in range(cap + 1):
            s = LaurentPoly.const(0)
            for j in range(i + 1):
                a, b = self.coeffs[j], other.coeffs[i - j]
                if a and b:
                    s = s + a * b
            out.append(s)
        return TruncSeries(self.var, cap, out)

    def truncate(self, cap):
        return TruncSeries(self.var, min(cap, self.cap), self.coeffs)

    def map(self, fn):
        return TruncSeries(self.var, self.cap, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.var, self.cap, self.coeffs) == (other.var, other.cap, other.coeffs)

    def __hash__(self):
        return hash((self.var, self.cap, self.coeffs))

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
                body = str(c) if not mono else (mono if c == 1 else f"({c})*{mono}")
                parts.append(body)
        return (" + ".join(parts) or "0") + f" + O({self.var}^{self.cap + 1})"

    __repr__ = __str__


def series_expand(f, var, cap):
    """Expand a rational function as a power series in var up to var**cap.

    The denominator, read as a polynomial in var over the other
    variables, must have a monomial (hence invertible) lowest term.
    """
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    num = f.num.by_power(var)
    den = f.den.by_power(var)
    shift = min(den)
    num = {k - shift: v for k, v in num.items()}
    den = {k - shift: v for k, v in den.items()}
    if num and min(num) < 0:
        raise NotExpandable(f"{f} has a pole at {var} = 0")
    d0 = den[0]
    if not d0.is_monomial():
        raise NotExpandable(f"constant term {d0} of the denominator in {var} is not invertible")
    inv = d0 ** -1
    out = []
    for i in range(cap + 1):
        s = num.get(i, LaurentPoly.const(0))
        for j in range(1, i + 1):
            dj = den.get(j)
            if dj is not None and out[i - j]:
                s = s - dj * out[i - j]
        out.append(s * inv)
    return TruncSeries(var, cap, out)


def specialize(f, bindings):
    """Evaluate a RatFunc at rationals; raises ZeroDivisionError at a pole."""
    if isinstance(f, LaurentPoly):
        return f.evaluate(bindings)
    return f.evaluate(bindings)
