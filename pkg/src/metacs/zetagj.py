"""Unramified local zeta integral as a truncated series in X = q^{-s}."""

from dataclasses import dataclass
from fractions import Fraction

from .characters import U
from .csmodel import theta_normalized_value
from .exactalg import LaurentPoly, RatFunc, TruncSeries, series_expand
from .hallittlewood import even_partitions, hl_P

X = LaurentPoly.var("X")


def satake_params(k, values=None):
    """Symbols x1..xk, or the given nonzero rationals."""
    if values is None:
        return tuple(LaurentPoly.var(f"x{i}") for i in range(1, k + 1))
    values = tuple(Fraction(v) for v in values)
    if len(values) != k or any(v == 0 for v in values):
        raise ValueError(f"need {k} nonzero Satake parameters")
    return tuple(LaurentPoly.const(v) for v in values)


def _bind(poly, params):
    return poly.subs({f"x{i + 1}": x for i, x in enumerate(params)})


def l_quotient_closed(k, params=None):
    """prod_{i<j} (1 - u^4 x_i x_j X^2) / prod_{i<=j} (1 - x_i x_j X^2)."""
    x = satake_params(k) if params is None else params
    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for i in range(k):
        for j in range(i, k):
            q = x[i] * x[j] * X ** 2
            den = den * (1 - q)
            if i < j:
                num = num * (1 - U ** 4 * q)
    return RatFunc(num, den)


def zeta_series(k, params=None, N=8):
    x = satake_params(k) if params is None else params
    coeffs = [LaurentPoly.const(0)] * (N + 1)
    for lam in even_partitions(k, N):
        p = _bind(hl_P(lam, k, U ** 4), x)
        d = sum(lam)
        coeffs[d] = coeffs[d] + p
    return TruncSeries("X", N, coeffs)


@dataclass
class ZetaReport:
    k: int
    N: int
    ok: bool
    witness: object = None


def _compare(a, b, k, N):
    for d in range(N + 1):
        if a.coeff(d) != b.coeff(d):
            return ZetaReport(k, N, False, {"degree": d, "lhs": str(a.coeff(d)), "rhs": str(b.coeff(d))})
    return ZetaReport(k, N, True)


def zeta_check(k, N, params=None):
    x = satake_params(k) if params is None else params
    return _compare(zeta_series(k, x, N), series_expand(l_quotient_closed(k, x), "X", N), k, N)


def zeta_from_cs(k, params=None, N=8):
    """Rebuild the series from Hall-Littlewood values and Shalika values.

    Per even lambda: delta_{B_k}^{-1/2} P_lambda times the product of the
    two normalized Shalika values, with |det|^{s - k/2} contributing
    u^{-2k|lambda|} X^{|lambda|}.
    """
    x = satake_params(k) if params is None else params
    coeffs = [LaurentPoly.const(0)] * (N + 1)
    for lam in even_partitions(k, N):
        d = sum(lam)
        # delta_{B_k}^{-1/2}(t_lam) with q^{-1/2} = u^2
        dk = U ** (-2 * sum(l * (k + 1 - 2 * i) for i, l in enumerate(lam, start=1)))
        sh = theta_normalized_value(k, lam).ratio
        term = RatFunc(dk * _bind(hl_P(lam, k, U ** 4), x)) * sh * sh * RatFunc(U ** (-2 * k * d))
        if not term.is_polynomial():
            raise ArithmeticError(f"non-polynomial term at {lam}")
        coeffs[d] = coeffs[d] + term.num
    return TruncSeries("X", N, coeffs)


def zeta_from_cs_check(k, N, params=None):
    x = satake_params(k) if params is None else params
    return _compare(zeta_from_cs(k, x, N), zeta_series(k, x, N), k, N)
