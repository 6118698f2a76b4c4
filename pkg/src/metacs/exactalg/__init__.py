"""Exact arithmetic: Laurent polynomials, rational functions, series."""

from .poly import LaurentPoly, poly_add, poly_mul, poly_exquo, poly_gcd_cofactors
from .ratfunc import RatFunc
from .series import TruncSeries, series_expand, specialize, NotExpandable
from .gauss import GaussRat, I


def var(name):
    return RatFunc.var(name)


def const(c):
    return RatFunc.const(c)


def ratfunc_normalize(num, den):
    return RatFunc(num, den)


__all__ = [
    "LaurentPoly", "RatFunc", "TruncSeries", "GaussRat", "I", "NotExpandable",
    "poly_add", "poly_mul", "poly_exquo", "poly_gcd_cofactors",
    "series_expand", "specialize", "ratfunc_normalize", "var", "const",
]
