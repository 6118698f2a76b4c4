"""Quadratic Hilbert symbol, Weil factor and Gauss sums over Q_p, p odd.

Elements of Q_p are represented by nonzero rationals; the uniformizer is p.
"""

import cmath
import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exactalg import GaussRat



class GaussConvention(Enum):
    # weil_gamma(p) is the normalized Gauss sum with exp(+2 pi i x^2/p)
    PLUS = "plus"
    # the conjugate choice, exp(-2 pi i x^2/p)
    MINUS = "minus"


DEFAULT_CONVENTION = GaussConvention.PLUS


def check_prime(p):
    if p == 2:
        raise ValueError("odd residue characteristic required")
    if not isinstance(p, int) or p < 3 or any(p % d == 0 for d in range(2, int(math.isqrt(p)) + 1)):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


class Mu4:
    """The fourth root of unity i**exponent."""

    __slots__ = ("exponent",)

    def __init__(self, exponent=0):
        self.exponent = exponent % 4

    @classmethod
    def sign(cls, s):
        return cls(0 if s == 1 else 2)

    def __mul__(self, other):
        if isinstance(other, int) and other in (1, -1):
            other = Mu4.sign(other)
        if not isinstance(other, Mu4):
            return NotImplemented
        return Mu4(self.exponent + other.exponent)

    __rmul__ = __mul__

    def __pow__(self, n):
        return Mu4(self.exponent * n)

    def inverse(self):
        return Mu4(-self.exponent)

    def __eq__(self, other):
        if isinstance(other, int) and other in (1, -1):
            other = Mu4.sign(other)
        if isinstance(other, Mu4):
            return self.exponent == other.exponent
        return NotImplemented

    def __hash__(self):
        return hash(self.exponent)

    def to_gauss(self):
        return (GaussRat(1), GaussRat(0, 1), GaussRat(-1), GaussRat(0, -1))[self.exponent]

    def __complex__(self):
        return (1 + 0j, 1j, -1 + 0j, -1j)[self.exponent]

    def __str__(self):
        return ("1", "i", "-1", "-i")[self.exponent]

    __repr__ = __str__


class PadicScalar:
    """A nonzero rational viewed in Q_p."""

    __slots__ = ("value", "p", "_v")

    def __init__(self, value, p):
        self.value = Fraction(value)
        if self.value == 0:
            raise ValueError("PadicScalar must be nonzero")
        self.p = check_prime(p)
        self._v = None

    @property
    def v(self):
        if self._v is None:
            self._v = valuation(self.value, self.p)
        return self._v

    @property
    def unit(self):
        return unit_part(self.value, self.p)

    def square_class(self):
        return self.v % 2, legendre(self.unit, self.p)

    def __mul__(self, other):
        if isinstance(other, PadicScalar):
            if other.p != self.p:
                raise ValueError("different primes")
            other = other.value
        return PadicScalar(self.value * Fraction(other), self.p)

    def __eq__(self, other):
        return isinstance(other, PadicScalar) and (self.value, self.p) == (other.value, other.p)

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"PadicScalar({self.value}, p={self.p})"


def _val(x):
    return x.value if isinstance(x, PadicScalar) else x


def is_small_prime(p):
    """p = 3 is accepted but flagged in reports."""
    return p == 3


def _split(x, p):
    """(v, unit residue mod p) of a nonzero rational x."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    a, b = x.numerator, x.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v, a * pow(b, -1, p) % p


def valuation(x, p):
    return _split(x, p)[0]


def unit_part(x, p):
    """x / p^v(x) reduced modulo p, as an integer in [1, p)."""
    return _split(x, p)[1]


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def hilbert2(a, b, p):
    """(a, b)_2 over Q_p for odd p."""
    a, b = _val(a), _val(b)
    if not a or not b:
        raise ValueError("Hilbert symbol of zero")
    return _hilbert_cached(a, b, p)


@lru_cache(maxsize=1 << 16)
def _hilbert_cached(a, b, p):
    check_prime(p)
    alpha, u = _split(a, p)
    beta, w = _split(b, p)
    s = (-1) ** ((alpha * beta * (p - 1) // 2) % 2)
    return s * legendre(u, p) ** (beta % 2) * legendre(w, p) ** (alpha % 2)


def _scaled(x, p):
    """Remove even powers of p: return (residue mod p^3, valuation 0 or 1)."""
    x = Fraction(x)
    v = valuation(x, p)
    x = x / Fraction(p) ** (v - v % 2)
    m = p ** 3
    return x.numerator * pow(x.denominator, -1, m) % m, v % 2


@lru_cache(maxsize=None)
def _squares_mod(p):
    m = p ** 3
    table = np.zeros(m, dtype=bool)
    table[(np.arange(m, dtype=np.int64) ** 2) % m] = True
    return table


@lru_cache(maxsize=None)
def _square_values(p):
    """Distinct x^2 mod p^3: over unit x, and over all x."""
    m = p ** 3
    x = np.arange(m, dtype=np.int64)
    sq = (x * x) % m
    return np.unique(sq[x % p != 0]), np.unique(sq)


@lru_cache(maxsize=None)
def _norm_form_solvable(a, b, p):
    m = p ** 3
    sq = _squares_mod(p)
    units, every = _square_values(p)
    # a solution is primitive when x or y is a unit; z is then unconstrained
    for s, t in ((units, every), (every, units)):
        vals = (a * s[:, None] + b * t[None, :]) % m
        if sq[vals].any():
            return True
    return False


def hilbert_bruteforce(a, b, p):
    """(a, b)_2 from the solvability of a x^2 + b y^2 = z^2.

    After scaling away even powers of p both coefficients are integral with
    valuation at most 1, and a primitive solution modulo p^3 lifts.
    """
    check_prime(p)
    (ra, _), (rb, _) = _scaled(_val(a), p), _scaled(_val(b), p)
    return 1 if _norm_form_solvable(ra, rb, p) else -1


def gauss_sum(p, sign=1):
    """sum_{x mod p} exp(sign * 2 pi i x^2 / p) as a complex number."""
    return sum(cmath.exp(sign * 2j * math.pi * x * x / p) for x in range(p))


@lru_cache(maxsize=None)
def gauss_sum_exact(p, convention=DEFAULT_CONVENTION):
    """p^{-1/2} times the Gauss sum, as the nearest fourth root of unity."""
    check_prime(p)
    g = gauss_sum(p, 1 if convention is GaussConvention.PLUS else -1) / math.sqrt(p)
    e = min(range(4), key=lambda j: abs(g - complex(Mu4(j))))
    if abs(g - complex(Mu4(e))) > 1e-6:
        raise ArithmeticError(f"normalized Gauss sum {g} is not a fourth root of unity")
    return Mu4(e)


def weil_gamma(a, p, convention=DEFAULT_CONVENTION):
    """Normalized Weil factor, trivial on units, with gamma(p) a Gauss sum."""
    check_prime(p)
    a = Fraction(_val(a))
    v = valuation(a, p)
    if v % 2 == 0:
        return Mu4(0)
    return gauss_sum_exact(p, convention) * legendre(unit_part(a, p), p)


def gamma_psi_a(a, x, p, convention=DEFAULT_CONVENTION):
    """Weil factor of the character x -> psi(a x): (a, x)_2 gamma(x)."""
    return weil_gamma(x, p, convention) * hilbert2(a, x, p)


def szpruch_integral(p, convention=DEFAULT_CONVENTION, check=True):
    """(1/p) sum_{x in (Z/p)^*} gamma(x/p) exp(-2 pi i x/p), numerically.

    The value must be p^{-1/2}; with check=True a mismatch raises, which
    signals a wrong Gauss convention.
    """
    check_prime(p)
    total = 0j
    for x in range(1, p):
        g = complex(weil_gamma(Fraction(x, p), p, convention))
        total += g * cmath.exp(-2j * math.pi * x / p)
    J = total / p
    if check and abs(J - p ** -0.5) >= 1e-9:
        raise ArithmeticError(f"Szpruch integral is {J}, expected {p ** -0.5} ({convention.value} convention)")
    return J


def epsilon_rho_k(rho, k, p):
    """The sign (-rho, p)_2 (p, p)_2^{k-1}."""
    return hilbert2(-Fraction(_val(rho)), p, p) * hilbert2(p, p, p) ** (k - 1)


def _twice(s):
    s = Fraction(s)
    if (2 * s).denominator != 1:
        raise ValueError("need 2*s_diff to be an integer for an exact value")
    return int(2 * s)


def rank_one_closed_form(p, s_diff):
    """1 - q^{-1} + q^{-2} + (1 - q^{-1})^2 Z/(1 - Z) with Z = q^{-2 s_diff}."""
    q = Fraction(p)
    Z = q ** -_twice(s_diff)
    return 1 - 1 / q + 1 / q ** 2 + (1 - 1 / q) ** 2 * Z / (1 - Z)


def _unit_level_measures(p, depth):
    """Measure of {z in O^*: v(1 - z) = l} for l < depth, by counting residues."""
    m = p ** depth
    counts = [0] * depth
    for z in range(m):
        if z % p == 0:
            continue
        d = (1 - z) % m
        l = 0
        while l < depth and d % p ** (l + 1) == 0:
            l += 1
        if l < depth:
            counts[l] += 1
    return [Fraction(c, m) for c in counts]


def rank_one_double_integral(p, M, s_diff, check_depth=3):
    """Stratified evaluation of the rank-one double integral.

    Integrates (-z1, 1 - z1 z2)_2 |1 - z1 z2|^{s-1} ch(1 - z1 z2) over
    O x O with s = s_diff. Returns (truncated value, closed form, tail bound).
    """
    check_prime(p)
    if Fraction(s_diff) <= 0:
        raise ValueError("need s_diff > 0 for convergence")
    if M < 0:
        raise ValueError("M must be nonnegative")
    q = Fraction(p)
    t = _twice(s_diff)

    # z1 in pO: 1 - z1 z2 is a unit square class, symbol and ch are 1
    outer = 1 / q
    # z1 unit, z2 in pO: same
    outer += (1 - 1 / q) / q
    # z1, z2 units: substitute z = z1 z2; only even levels survive
    meas = _unit_level_measures(p, check_depth)
    def level_measure(l):
        if l < check_depth:
            return meas[l]
        return (1 - 1 / q) / q ** l
    inner = Fraction(0)
    for l in range(0, 2 * M + 1, 2):
        # |1 - z|^{s-1} at level l, times its measure
        inner += level_measure(l) * q ** (l - l * t // 2)
    value = outer + (1 - 1 / q) * inner
    # the remaining even levels l >= 2M + 2 sum to a geometric tail
    Z = q ** -t
    tail = (1 - 1 / q) ** 2 * Z ** (M + 1) / (1 - Z)
    closed = rank_one_closed_form(p, s_diff)
    if abs(closed - value) > tail:
        raise ArithmeticError(f"stratified value {value} misses closed form {closed} by more than {tail}")
    return value, closed, tail


def rank_one_bruteforce(p, depth, s_diff):
    """Direct sum over (z1, z2) mod p^depth of the truncated integrand.

    Pairs with v(1 - z1 z2) >= depth are dropped; the result is a lower
    approximation that differs from the closed form by at most the
    measure of those pairs.
    """
    check_prime(p)
    t = _twice(s_diff)
    m = p ** depth
    q = Fraction(p)
    total = Fraction(0)
    for z1 in range(m):
        for z2 in range(m):
            w = (1 - z1 * z2) % m
            if w == 0:
                continue
            l = valuation(w, p)
            if l % 2:
                continue
            sym = hilbert2(-z1, w, p) if z1 else 1
            total += sym * q ** (l - l * t // 2)
    return total / m ** 2
