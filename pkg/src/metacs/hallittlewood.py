"""Hall-Littlewood polynomials P_lambda(x_1..x_k; t) by symmetrization."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .exactalg import LaurentPoly, RatFunc, poly_exquo, series_expand

T = LaurentPoly.var("t")


def xvar(i):
    return LaurentPoly.var(f"x{i}")


def _check(lam, k):
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError("partition parts must be nonnegative")
    if len(lam) > k:
        if any(lam[k:]):
            raise ValueError(f"partition {lam} has more than {k} parts")
        lam = lam[:k]
    lam = lam + (0,) * (k - len(lam))
    if list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"{lam} is not weakly decreasing")
    return lam


def _sign(perm):
    s, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                c += 1
            s *= -1 if c % 2 == 0 else 1
    return s


def _permute(poly, perm, k):
    """Apply x_i -> x_{perm[i-1]+1}."""
    names = {f"x{i + 1}": f"x{perm[i] + 1}" for i in range(k)}
    vs = poly.variables
    new = tuple(names.get(v, v) for v in vs)
    return LaurentPoly(poly.terms, new)


def vandermonde(k):
    out = LaurentPoly.const(1)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            out = out * (xvar(i) - xvar(j))
    return out


def t_factorial(m):
    """prod_{j=1}^m (1 - t^j)/(1 - t)."""
    out = LaurentPoly.const(1)
    for j in range(1, m + 1):
        out = out * sum((T ** a for a in range(j)), LaurentPoly.const(0))
    return out


def v_lambda(lam):
    out = LaurentPoly.const(1)
    for part in set(lam):
        out = out * t_factorial(lam.count(part))
    return out


@lru_cache(maxsize=None)
def _hl_symbolic(lam, k):
    kernel = LaurentPoly.monomial(1, {f"x{i + 1}": l for i, l in enumerate(lam)})
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            kernel = kernel * (xvar(i) - T * xvar(j))
    total = LaurentPoly.const(0)
    for perm in permutations(range(k)):
        total = total + _sign(perm) * _permute(kernel, perm, k)
    total = poly_exquo(total, vandermonde(k))
    return poly_exquo(total, v_lambda(lam))


def hl_P(lam, k, tparam=None):
    """P_lambda(x_1..x_k; t) as a LaurentPoly (a RatFunc if tparam is one).

    tparam None keeps the symbol t; otherwise t is replaced by it.
    """
    lam = _check(lam, k)
    p = _hl_symbolic(lam, k)
    if tparam is None:
        return p
    if isinstance(p, LaurentPoly) and isinstance(tparam, RatFunc):
        return RatFunc(p).subs({"t": tparam})
    return p.subs({"t": tparam})


def monomial_symmetric(lam, k):
    lam = _check(lam, k)
    out = LaurentPoly.const(0)
    for arr in sorted(set(permutations(lam))):
        out = out + LaurentPoly.monomial(1, {f"x{i + 1}": a for i, a in enumerate(arr)})
    return out


def schur_bialternant(lam, k):
    """a_{lambda+delta} / a_delta by alternant determinants."""
    lam = _check(lam, k)
    expo = [lam[i] + k - 1 - i for i in range(k)]
    num = LaurentPoly.const(0)
    for perm in permutations(range(k)):
        num = num + _sign(perm) * LaurentPoly.monomial(1, {f"x{perm[i] + 1}": expo[i] for i in range(k)})
    return poly_exquo(num, vandermonde(k))


def hl_coset_formula(lam, k):
    """Independent oracle: sum over S_k / S_k^lambda with rational functions."""
    lam = _check(lam, k)
    total = RatFunc.const(0)
    seen = set()
    for perm in permutations(range(k)):
        image = tuple(lam[perm.index(i)] for i in range(k))
        if image in seen:
            continue
        seen.add(image)
        term = RatFunc(LaurentPoly.monomial(1, {f"x{perm[i] + 1}": lam[i] for i in range(k)}))
        for i in range(k):
            for j in range(i + 1, k):
                if lam[i] > lam[j]:
                    a, b = xvar(perm[i] + 1), xvar(perm[j] + 1)
                    term = term * RatFunc(a - T * b, a - b)
        total = total + term
    if not total.is_polynomial():
        raise ArithmeticError("coset formula did not produce a polynomial")
    return total.num


def hl_two_variable(lam):
    """Closed form for k = 2: (x1 x2)^b (h_m - t x1 x2 h_{m-2}), m = a - b."""
    a, b = _check(lam, 2)
    x1, x2 = xvar(1), xvar(2)

    def h(m):
        if m < 0:
            return LaurentPoly.const(0)
        return sum((x1 ** j * x2 ** (m - j) for j in range(m + 1)), LaurentPoly.const(0))
    m = a - b
    core = h(m) - (T * x1 * x2 * h(m - 2) if m >= 2 else 0)
    return (x1 * x2) ** b * core


def is_symmetric(poly, k):
    return all(_permute(poly, perm, k) == poly for perm in permutations(range(k)))


@dataclass
class SpecializationReport:
    lam: tuple
    k: int
    schur_ok: bool
    monomial_ok: bool

    @property
    def ok(self):
        return self.schur_ok and self.monomial_ok


def hl_specialization_checks(lam, k):
    p = hl_P(lam, k)
    return SpecializationReport(
        tuple(lam), k,
        schur_ok=p.subs({"t": 0}) == schur_bialternant(lam, k),
        monomial_ok=p.subs({"t": 1}) == monomial_symmetric(lam, k),
    )


def partitions_at_most(k, size, largest=None):
    """Partitions of size into at most k parts, as k-tuples padded with 0."""
    if largest is None:
        largest = size
    if size == 0:
        yield (0,) * k
        return
    if k == 0:
        return
    for first in range(min(size, largest), 0, -1):
        for rest in partitions_at_most(k - 1, size - first, first):
            yield (first,) + rest


def even_partitions(k, N):
    """Partitions with even parts, at most k of them, |lam| <= N.

    Ordered by size, then lexicographically increasing.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    out = []
    for half in range(N // 2 + 1):
        out.extend(sorted(tuple(2 * x for x in lam) for lam in partitions_at_most(k, half)))
    return out


def hl_product_side(k, r=None):
    """prod_{i<j} (1 - r x_i x_j) / prod_{i<=j} (1 - x_i x_j), with X grading."""
    r = LaurentPoly.var("r") if r is None else r
    X = LaurentPoly.var("X")
    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            q = xvar(i) * xvar(j) * X ** 2
            den = den * (1 - q)
            if i < j:
                num = num * (1 - r * q)
    return RatFunc(num, den)


@dataclass
class IdentityReport:
    k: int
    N: int
    ok: bool
    witness: object = None


def hl_sum_identity_check(k, N):
    """sum_{lam even, |lam| <= N} P_lam(x; r) against the product, degree by degree."""
    series = series_expand(hl_product_side(k), "X", N)
    for d in range(N + 1):
        lhs = LaurentPoly.const(0)
        for lam in even_partitions(k, N):
            if sum(lam) == d:
                lhs = lhs + hl_P(lam, k).subs({"t": LaurentPoly.var("r")})
        rhs = series.coeff(d)
        if lhs != rhs:
            return IdentityReport(k, N, False, {"degree": d, "sum": str(lhs), "product": str(rhs)})
    return IdentityReport(k, N, True)
