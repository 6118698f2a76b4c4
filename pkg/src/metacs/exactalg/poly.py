"""Sparse multivariate Laurent polynomials over Q."""

import re
from fractions import Fraction
from functools import lru_cache

from sympy.polys.domains import QQ
from sympy.polys.rings import ring


def _natural_key(name):
    parts = re.split(r"(\d+)", name)
    return tuple(int(p) if p.isdigit() else p for p in parts)


def _sorted_vars(names):
    return tuple(sorted(set(names), key=_natural_key))


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


@lru_cache(maxsize=None)
def _reindex(src, dst):
    return tuple(dst.index(v) for v in src)


def _lift(variables, terms, target):
    """Re-express exponent tuples over a superset of variables."""
    if variables == target:
        return terms
    idx = _reindex(variables, target)
    n = len(target)
    out = {}
    for e, c in terms.items():
        v = [0] * n
        for i, x in zip(idx, e):
            v[i] = x
        out[tuple(v)] = c
    return out


def _grlex_key(e):
    return (sum(e), e)


class LaurentPoly:
    """Finite sum of rational multiples of Laurent monomials.

    Variables are kept in natural sort order and unused variables are
    dropped, so structural equality is mathematical equality.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, terms=None, variables=()):
        terms = terms or {}
        variables = tuple(variables)
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != len(variables):
                raise ValueError("exponent length does not match variables")
            c = _as_fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        target = _sorted_vars(variables)
        if len(target) != len(variables):
            raise ValueError("duplicate variable names")
        clean = _lift(variables, clean, target)
        self.variables, self.terms = _trim(target, clean)
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        obj = object.__new__(cls)
        obj.variables, obj.terms = _trim(variables, terms)
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        c = _as_fraction(c)
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def var(cls, name):
        return cls._raw((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(cls, coeff=1, powers=None):
        powers = {k: v for k, v in (powers or {}).items() if v}
        names = _sorted_vars(powers)
        e = tuple(powers[v] for v in names)
        return cls._raw(names, {e: _as_fraction(coeff)} if coeff else {})

    # structure
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.variables

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get((), Fraction(0))

    def leading(self):
        """Leading (exponent dict, coefficient) in graded lex order."""
        e = max(self.terms, key=_grlex_key)
        return dict(zip(self.variables, e)), self.terms[e]

    def leading_coeff(self):
        return self.terms[max(self.terms, key=_grlex_key)]

    def min_exponents(self):
        if not self.terms:
            return {}
        es = list(self.terms)
        return {v: min(e[i] for e in es) for i, v in enumerate(self.variables)}

    def degree(self, name):
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max(e[i] for e in self.terms)

    def total_degree(self):
        return max(sum(e) for e in self.terms)

    def by_power(self, name):
        """Split into {exponent of name: coefficient polynomial}."""
        if name not in self.variables:
            return {0: self} if self.terms else {}
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1:]
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: LaurentPoly._raw(rest, v) for k, v in parts.items()}

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def _common(self, other):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        vs = _sorted_vars(self.variables + other.variables)
        return vs, _lift(self.variables, self.terms, vs), _lift(other.variables, other.terms, vs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        vs, a, b = self._common(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

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
        if other.is_constant():
            c = other.constant_value()
            return LaurentPoly._raw(self.variables, {e: v * c for e, v in self.terms.items()} if c else {})
        vs, a, b = self._common(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(vs, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.variables, {tuple(-x * -n for x in e): c ** n})
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def monomial_inverse(self):
        return self ** -1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # substitution
    def subs(self, mapping):
        """Substitute polynomials (or rationals) for variables."""
        mapping = {k: (v if isinstance(v, LaurentPoly) else LaurentPoly.const(v))
                   for k, v in mapping.items() if k in self.variables}
        if not mapping:
            return self
        idx = list(enumerate(self.variables))
        cache = {}

        def power(name, k):
            key = (name, k)
            if key not in cache:
                cache[key] = mapping[name] ** k
            return cache[key]

        out = LaurentPoly.const(0)
        for e, c in self.terms.items():
            rest = {v: e[i] for i, v in idx if v not in mapping}
            term = LaurentPoly.monomial(c, rest)
            for i, v in idx:
                if v in mapping and e[i]:
                    term = term * power(v, e[i])
            out = out + term
        return out

    def evaluate(self, bindings):
        """Evaluate at rational values for every variable."""
        missing = [v for v in self.variables if v not in bindings]
        if missing:
            raise ValueError(f"unbound variables: {missing}")
        vals = [_as_fraction(bindings[v]) for v in self.variables]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    if not x and k < 0:
                        raise ZeroDivisionError("negative power of zero")
                    t *= x ** k
            total += t
        return total

    # printing
    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPoly({self})"


def _trim(variables, terms):
    if not variables:
        return variables, terms
    used = [any(e[i] for e in terms) for i in range(len(variables))]
    if all(used):
        return variables, terms
    keep = [i for i, u in enumerate(used) if u]
    vs = tuple(variables[i] for i in keep)
    return vs, {tuple(e[i] for i in keep): c for e, c in terms.items()}


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


# Sympy handles the multivariate gcd and exact division on the ordinary
# polynomial part; everything else stays in LaurentPoly.

@lru_cache(maxsize=None)
def _sympy_ring(n):
    names = ",".join(f"v{i}" for i in range(n))
    return ring(names, QQ)[0]


def _to_ring(p, variables):
    """Shift p to an ordinary polynomial; return (ring element, shift)."""
    terms = _lift(p.variables, p.terms, variables)
    n = len(variables)
    shift = [min(e[i] for e in terms) for i in range(n)] if terms else [0] * n
    R = _sympy_ring(n)
    d = {tuple(x - s for x, s in zip(e, shift)): QQ(c.numerator, c.denominator) for e, c in terms.items()}
    return R.from_dict(d), shift


def _from_ring(r, variables, shift=None):
    shift = shift or [0] * len(variables)
    out = {}
    for e, c in r.items():
        out[tuple(x + s for x, s in zip(e, shift))] = Fraction(int(c.numerator), int(c.denominator))
    return LaurentPoly._raw(tuple(variables), out)


def poly_gcd_cofactors(a, b):
    """Return (g, a/g, b/g) for ordinary (nonnegative exponent) polynomials."""
    vs = _sorted_vars(a.variables + b.variables)
    if not vs:
        return LaurentPoly.const(1), a, b
    ra, sa = _to_ring(a, vs)
    rb, sb = _to_ring(b, vs)
    if any(sa) or any(sb):
        raise ValueError("gcd needs ordinary polynomials")
    g, ca, cb = ra.cofactors(rb)
    return _from_ring(g, vs), _from_ring(ca, vs), _from_ring(cb, vs)


def poly_exquo(a, b):
    """Exact quotient a/b; raises ValueError when b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if b.is_monomial():
        return a * b ** -1
    vs = _sorted_vars(a.variables + b.variables)
    ra, sa = _to_ring(a, vs)
    rb, sb = _to_ring(b, vs)
    q, r = ra.div(rb)
    if r:
        raise ValueError("inexact polynomial division")
    return _from_ring(q, vs, [x - y for x, y in zip(sa, sb)])
