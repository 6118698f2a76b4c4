"""Rational functions in lowest terms."""

from fractions import Fraction

from .poly import LaurentPoly, poly_gcd_cofactors, _as_fraction


def _monomial_part(p):
    """Split p = m * P with m a monomial and P not divisible by any variable."""
    shift = p.min_exponents()
    m = LaurentPoly.monomial(1, shift)
    return m, p * LaurentPoly.monomial(1, {k: -v for k, v in shift.items()})


class RatFunc:
    """num/den with gcd(num, den) = 1.

    The denominator is an ordinary polynomial, not divisible by any
    variable, with graded-lex leading coefficient 1. Any monomial unit
    lives in the numerator. This makes the pair canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _poly(num)
        den = LaurentPoly.const(1) if den is None else _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def const(cls, c):
        return cls._raw(LaurentPoly.const(c), LaurentPoly.const(1))

    @classmethod
    def var(cls, name):
        return cls._raw(LaurentPoly.var(name), LaurentPoly.const(1))

    @property
    def variables(self):
        return tuple(sorted(set(self.num.variables) | set(self.den.variables)))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den == 1

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RatFunc._raw(_poly(other), LaurentPoly.const(1))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.den == 1:
                return RatFunc._raw(self.num + other.num, self.den)
            return RatFunc(self.num + other.num, self.den)
        if self.den == 1:
            return RatFunc._raw(self.num * other.den + other.num, other.den)
        if other.den == 1:
            return RatFunc._raw(other.num * self.den + self.num, self.den)
        g, a, b = poly_gcd_cofactors(self.den, other.den)
        return RatFunc(self.num * b + other.num * a, self.den * b)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc.const(0)
        if self.den == 1 and other.den == 1:
            return RatFunc._raw(self.num * other.num, self.den)
        # cross-cancel, both inputs already reduced
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        return _fix_unit(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** -n
        return RatFunc._raw(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def subs(self, mapping):
        """Substitute RatFunc/LaurentPoly/rational values for variables."""
        return _subs_poly(self.num, mapping) / _subs_poly(self.den, mapping)

    def evaluate(self, bindings):
        d = self.den.evaluate(bindings)
        if d == 0:
            raise ZeroDivisionError(f"pole: denominator {self.den} vanishes at {bindings}")
        return self.num.evaluate(bindings) / d

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def _poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, RatFunc):
        if x.den != 1:
            raise TypeError("expected a polynomial")
        return x.num
    return LaurentPoly.const(_as_fraction(x))


def _cancel(a, b):
    """Remove gcd of a (Laurent) and b (ordinary)."""
    if b.is_constant():
        return a, b
    ma, pa = _monomial_part(a)
    _, ca, cb = poly_gcd_cofactors(pa, b)
    return ma * ca, cb


def _fix_unit(num, den):
    if den.is_constant():
        c = den.constant_value()
        return RatFunc._raw(num * (1 / c), LaurentPoly.const(1))
    lc = den.leading_coeff()
    if lc != 1:
        num = num * (1 / lc)
        den = den * (1 / lc)
    return RatFunc._raw(num, den)


def _normalize(num, den):
    if num.is_zero():
        return num, LaurentPoly.const(1)
    mn, pn = _monomial_part(num)
    md, pd = _monomial_part(den)
    unit = mn * md ** -1
    if not pd.is_constant():
        _, pn, pd = poly_gcd_cofactors(pn, pd)
    r = _fix_unit(unit * pn, pd)
    return r.num, r.den


def _subs_poly(p, mapping):
    out = RatFunc.const(0)
    cache = {}
    vals = {k: (v if isinstance(v, RatFunc) else RatFunc(_poly(v))) for k, v in mapping.items()}
    simple = all(v.den == 1 and (v.num.is_monomial() or v.num.is_constant()) for v in vals.values())
    if simple or all(v.den == 1 for v in vals.values()):
        try:
            return RatFunc(p.subs({k: v.num for k, v in vals.items()}))
        except ValueError:
            pass
    for e, c in p.terms.items():
        term = RatFunc.const(c)
        rest = {}
        for name, k in zip(p.variables, e):
            if name in vals:
                key = (name, k)
                if key not in cache:
                    cache[key] = vals[name] ** k
                term = term * cache[key]
            else:
                rest[name] = k
        out = out + term * LaurentPoly.monomial(1, rest)
    return out
