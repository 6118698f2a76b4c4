"""Casselman-Shalika values for the Shalika-type functional on the symplectic locus.

The single character input ``eta`` is the one whose principal series
carries the functional; inside the formulas it appears as chi^{-1}, so
chi = eta^{-1} throughout this module.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .characters import (
    SymplecticChar, U, delta_half, delta_quarter, eval_a, eval_half_long, eval_torus, theta_char,
    weyl_act,
)
from .exactalg import LaurentPoly, RatFunc
from .weylroots import (
    GLRoot, all_gl, all_sp, embed_sp, gl_positive_roots, sp_generators, sp_positive_roots, sp_to_gl,
)

U4 = RatFunc(U ** 4)
U2 = RatFunc(U ** 2)
ONE = RatFunc.const(1)


@dataclass(frozen=True)
class CSInput:
    eta: SymplecticChar
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +-1")

    @property
    def k(self):
        return self.eta.k

    @property
    def chi(self):
        return self.eta.inverse()


def c_alpha(chi, alpha):
    a = eval_a(chi, alpha)
    if a == ONE:
        raise ZeroDivisionError(f"non-regular character at {alpha}")
    return (ONE - U4 * a) / (ONE - a)


def c_w(chi, w):
    out = ONE
    for alpha in w.inversions():
        out = out * c_alpha(chi, alpha)
    return out


def y_alpha(inp, alpha):
    """y_alpha evaluated at the input character (the formulas' chi^{-1})."""
    chi = inp.chi
    if not alpha.positive:
        raise ValueError("y is indexed by positive roots")
    if not alpha.is_long:
        r = sp_to_gl(alpha)
        return c_alpha(inp.eta, r) * c_alpha(chi, r)
    r = sp_to_gl(alpha)
    a = eval_a(chi, r)
    if a == ONE:
        raise ZeroDivisionError(f"non-regular character at {alpha}")
    e = inp.eps
    return (ONE + e * U2 * eval_half_long(chi, alpha, -1)) * (ONE - e * U2 * eval_half_long(chi, alpha, 1)) / (ONE - a)


def A_w(inp, w):
    out = ONE
    for alpha in w.sp_inversions():
        out = out * y_alpha(inp, alpha)
    return out


def a_rank_one_closed_form(inp, index):
    """Closed forms of A at a simple reflection of Sp_2k.

    index k is the long generator; index i < k is s_i s_{n-i}.
    """
    k, chi = inp.k, inp.chi
    if index == k:
        r = GLRoot(k, k + 1)
        return c_alpha(chi, r) - U4 + inp.eps * U2 * eval_half_long(chi, r, -1)
    if not 1 <= index < k:
        raise ValueError("generator index out of range")
    r = GLRoot(index, index + 1)
    c = c_alpha(chi, r) - ONE
    ainv = eval_a(chi, r).inverse()
    return -(c * c) + ONE - U4 + U4 * U4 + (ONE - U4) ** 2 * ainv / (ONE - ainv)


@lru_cache(maxsize=None)
def Q_poly(n):
    """sum over S_n of q^{-l(w)} with q^{-1} = u^4."""
    total = LaurentPoly.const(0)
    for w in all_gl(n):
        total = total + U ** (4 * w.length())
    return RatFunc(total)


def vol_iwahori(n):
    """Volume of the Iwahori subgroup when vol(K) = 1: (sum_w q^{l(w)})^{-1}."""
    total = LaurentPoly.const(0)
    for w in all_gl(n):
        total = total + U ** (-4 * w.length())
    return RatFunc(total).inverse()


def is_even_dominant(lam):
    return all(x % 2 == 0 for x in lam) and all(a >= b for a, b in zip(lam, lam[1:])) and all(x >= 0 for x in lam)


def _check_lambda(lam, k):
    lam = tuple(int(x) for x in lam)
    if len(lam) != k:
        raise ValueError(f"lambda must have {k} parts")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("lambda must be weakly decreasing")
    return lam


def _sp_elements(k):
    return sorted(all_sp(k), key=lambda w: (w.sp_length(), w.perm, w.signs))


def expanded_terms(inp, lam):
    """The Weyl-sum terms of the expanded formula, keyed by Sp element."""
    k = inp.k
    lam = _check_lambda(lam, k)
    chi = inp.chi
    dh = delta_half(k, lam)
    pos = gl_positive_roots(2 * k)
    out = []
    for w in _sp_elements(k):
        g = embed_sp(w)
        term = ONE
        for alpha in pos:
            if g.act(alpha).positive:
                term = term * c_alpha(inp.eta, alpha)
        term = term * A_w(inp, w)
        if not term.is_zero():
            term = term * dh * eval_torus(weyl_act(w, chi), lam)
        out.append((w, term))
    return out


def cs_value_expanded(inp, lam):
    k = inp.k
    lam = _check_lambda(lam, k)
    if not is_even_dominant(lam):
        return RatFunc.const(0)
    total = RatFunc.const(0)
    for _, term in expanded_terms(inp, lam):
        total = total + term
    return total / Q_poly(2 * k)


def _half_root_product(psi):
    """prod over positive Sp roots of psi^{1/2}(a_alpha) = z^{sum of positive roots}."""
    k = psi.k
    out = LaurentPoly.const(1)
    for alpha in sp_positive_roots(k):
        for i, x in enumerate(alpha.vec):
            if x:
                out = out * psi.z[i] ** x
    return RatFunc(out)


def beta(psi, eps):
    """beta at a character psi (in the formula's role of chi^{-1})."""
    out = _half_root_product(psi).inverse()
    for alpha in sp_positive_roots(psi.k):
        r = sp_to_gl(alpha)
        if alpha.is_long:
            out = out * (ONE - eps * U2 * eval_half_long(psi, alpha, 1))
        else:
            out = out * (ONE - U4 * eval_a(psi, r))
    return out


def cs_value_compact(inp, lam):
    k = inp.k
    lam = _check_lambda(lam, k)
    if not is_even_dominant(lam):
        return RatFunc.const(0)
    chi, eta = inp.chi, inp.eta
    b0 = beta(eta, inp.eps)
    if b0.is_zero():
        raise ZeroDivisionError("beta vanishes identically")
    dh = delta_half(k, lam)
    total = RatFunc.const(0)
    for w in _sp_elements(k):
        wchi = weyl_act(w, chi)
        sign = -1 if w.sp_length() % 2 else 1
        total = total + sign * beta(wchi.inverse(), inp.eps) * dh * eval_torus(wchi, lam)
    n = 2 * k
    w0 = all_gl(n)[-1]
    assert w0.length() == n * (n - 1) // 2
    return c_w(eta, w0) / b0 * total / Q_poly(n)


@dataclass
class ThetaReport:
    k: int
    lam: tuple
    ratio: RatFunc
    survivors: list = field(default_factory=list)
    expected: RatFunc = None

    @property
    def ok(self):
        only_e = all(w.perm == tuple(range(self.k)) and w.signs == (1,) * self.k for w in self.survivors)
        return only_e and self.ratio == self.expected


def theta_input(k):
    """The exceptional point as engine input.

    The theta functional lives on the principal series of the theta
    character itself, which is the engine's eta; the formulas then see
    chi = eta^{-1}.
    """
    return CSInput(theta_char(k), 1)


@lru_cache(maxsize=None)
def _theta_base(k):
    inp = theta_input(k)
    return cs_value_expanded(inp, (0,) * k)


def theta_normalized_value(k, lam):
    lam = tuple(lam)
    if not is_even_dominant(lam):
        return ThetaReport(k, lam, RatFunc.const(0), [], RatFunc.const(0))
    inp = theta_input(k)
    terms = expanded_terms(inp, lam)
    survivors = [w for w, t in terms if not t.is_zero()]
    value = sum((t for _, t in terms), RatFunc.const(0)) / Q_poly(2 * k)
    return ThetaReport(k, lam, value / _theta_base(k), survivors, delta_quarter(k, lam))


def length_additive_pairs(n):
    """All (w, w') in S_n with l(w'w) = l(w') + l(w)."""
    ws = all_gl(n)
    return [(w, v) for w in ws for v in ws if (v * w).length() == v.length() + w.length()]


def gk_check(chi_full, w, v):
    """c_{v}(^w chi) c_w(chi) == c_{vw}(chi) for a character on all of GL_n.

    chi_full is a tuple of Laurent monomials Z_a = q^{-s_a}, a = 1..n.
    """
    def c(Z, g):
        out = ONE
        for alpha in g.inversions():
            a = RatFunc((Z[alpha.i - 1] * Z[alpha.j - 1] ** -1) ** 2)
            out = out * (ONE - U4 * a) / (ONE - a)
        return out
    winv = w.inverse()
    wZ = tuple(chi_full[winv(j) - 1] for j in range(1, len(chi_full) + 1))
    return c(wZ, v) * c(chi_full, w) == c(chi_full, v * w)


__all__ = [
    "CSInput", "c_alpha", "c_w", "y_alpha", "A_w", "a_rank_one_closed_form", "Q_poly", "vol_iwahori",
    "cs_value_expanded", "cs_value_compact", "beta", "theta_normalized_value", "theta_input",
    "expanded_terms", "gk_check", "length_additive_pairs", "sp_generators",
]
