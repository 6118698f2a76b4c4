"""Unramified genuine characters on the symplectic locus.

A character is recorded by z_i = q^{-s_i} for i <= k; the remaining
coordinates are forced by s_{2k+1-i} = -s_i. The ground variable is
u = q^{-1/4}, so q^{-1/2} = u^2 and q^{-1} = u^4.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .exactalg import LaurentPoly, RatFunc
from .weylroots import GLRoot, SpRoot, WeylGL, all_sp, embed_sp

U = LaurentPoly.var("u")


def _lp(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, RatFunc):
        if x.den != 1:
            raise ValueError("character parameter must be a Laurent monomial or rational")
        return x.num
    return LaurentPoly.const(Fraction(x))


@dataclass(frozen=True)
class SymplecticChar:
    z: tuple
    eps: int = 1

    def __post_init__(self):
        z = tuple(_lp(v) for v in self.z)
        for v in z:
            if v.is_zero() or not v.is_monomial():
                raise ValueError(f"parameter {v} is not a nonzero monomial or rational")
        if self.eps not in (1, -1):
            raise ValueError("eps must be +-1")
        object.__setattr__(self, "z", z)

    @property
    def k(self):
        return len(self.z)

    @property
    def n(self):
        return 2 * self.k

    def coord(self, a):
        """q^{-s_a} for 1 <= a <= 2k."""
        k = self.k
        return self.z[a - 1] if a <= k else self.z[2 * k - a] ** -1

    def is_numeric(self):
        return all(v.is_constant() for v in self.z)

    def inverse(self):
        return SymplecticChar(tuple(v ** -1 for v in self.z), self.eps)


def symbolic_char(k, eps=1, prefix="z"):
    return SymplecticChar(tuple(LaurentPoly.var(f"{prefix}{i}") for i in range(1, k + 1)), eps)


def theta_char(k):
    """Parameters of the exceptional point: s_i = (n+1-2i)/4."""
    n = 2 * k
    return SymplecticChar(tuple(U ** (n + 1 - 2 * i) for i in range(1, k + 1)), 1)


def eval_a(chi, root):
    """chi(a_alpha) for a GL root alpha = (i, j): (z'_i / z'_j)^2."""
    return RatFunc((chi.coord(root.i) * chi.coord(root.j) ** -1) ** 2)


def eval_half_long(chi, root, sign=1):
    """chi^{+-1/2}(a_alpha) for a long Sp root 2e_i: z_i^{+-2}."""
    if isinstance(root, SpRoot):
        if not root.is_long:
            raise ValueError("half powers exist only on long roots")
        i = next(a for a, x in enumerate(root.vec) if x) + 1
        s = 1 if root.positive else -1
    else:
        n = chi.n
        if root.i + root.j != n + 1:
            raise ValueError("half powers exist only on long roots")
        i, s = (root.i, 1) if root.i < root.j else (root.j, -1)
    return RatFunc(chi.z[i - 1] ** (2 * s * sign))


def eval_torus(chi, lam):
    """chi(s(t_lam)) = prod_i z'_i^{lam_i}; lam has length k or 2k."""
    lam = tuple(lam)
    if len(lam) not in (chi.k, chi.n):
        raise ValueError("lambda has the wrong length")
    out = LaurentPoly.const(1)
    for a, l in enumerate(lam, start=1):
        if l:
            out = out * chi.coord(a) ** l
    return RatFunc(out)


def delta_half(k, lam):
    """delta_B^{1/2}(t_lam) on GL_2k, lam padded by zeros."""
    n = 2 * k
    e = sum(l * (n + 1 - 2 * i) for i, l in enumerate(lam, start=1))
    return RatFunc(U ** (2 * e))


def delta_quarter(k, lam):
    n = 2 * k
    e = sum(l * (n + 1 - 2 * i) for i, l in enumerate(lam, start=1))
    return RatFunc(U ** e)


def weyl_act(w, chi):
    """The character t -> chi(w^{-1} t w), for w in S_2k or W(Sp_2k)."""
    if not isinstance(w, WeylGL):
        w = embed_sp(w)
    if w.n != chi.n:
        raise ValueError("Weyl element and character have different ranks")
    if not preserves_locus(w, chi.k):
        raise ValueError("Weyl element does not preserve the symplectic locus")
    winv = w.inverse()
    return SymplecticChar(tuple(chi.coord(winv(j)) for j in range(1, chi.k + 1)), chi.eps)


def preserves_locus(w, k):
    """True when w maps the symplectic locus to itself."""
    n = 2 * k
    return all(w(n + 1 - a) == n + 1 - w(a) for a in range(1, n + 1))


@dataclass(frozen=True)
class AdmissibilityReport:
    regular: bool
    shalika_dim_le_1: bool
    tau: tuple
    necessary_condition: bool


def admissibility(chi):
    """Numeric uniqueness conditions for the Shalika functional of a character.

    ``chi`` is either a numeric SymplecticChar or a sequence of 2k
    nonzero rationals Z_a = q^{-s_a} for a general character.
    """
    if isinstance(chi, SymplecticChar):
        if not chi.is_numeric():
            raise ValueError("admissibility needs numeric parameters")
        Z = [chi.coord(a).constant_value() for a in range(1, chi.n + 1)]
    else:
        Z = [Fraction(x) for x in chi]
        if len(Z) % 2 or not Z or any(x == 0 for x in Z):
            raise ValueError("need 2k nonzero rationals")
    n = len(Z)
    k = n // 2
    sq = [x * x for x in Z]
    cond1 = all(sq[i] * sq[j] != 1 for i in range(k) for j in range(i + 1, k))
    tau_found, nec = None, False
    taus = list(permutations(range(k)))
    for tau in taus:
        ok = all(sq[i] * sq[k + j] != 1 for i in range(k) for j in range(k) if j != tau[i])
        if ok:
            here = all(sq[i] * sq[k + tau[i]] == 1 for i in range(k))
            if tau_found is None or (here and not nec):
                tau_found, nec = tau, here
            if nec:
                break
    regular = _regular(Z)
    return AdmissibilityReport(
        regular=regular,
        shalika_dim_le_1=cond1 and tau_found is not None,
        tau=tuple(t + 1 for t in tau_found) if tau_found is not None else (),
        necessary_condition=bool(tau_found is not None and nec),
    )


def _regular(Z):
    """No nontrivial element of W(Sp_2k) fixes the squared parameters.

    Only meaningful on the symplectic locus; for a general character the
    GL_2k Weyl group is used instead.
    """
    n = len(Z)
    k = n // 2
    sq = [x * x for x in Z]
    on_locus = all(sq[a] * sq[n - 1 - a] == 1 for a in range(n))
    if on_locus:
        for w in all_sp(k):
            g = embed_sp(w)
            if g.perm == tuple(range(n)):
                continue
            ginv = g.inverse()
            if all(sq[ginv(j) - 1] == sq[j - 1] for j in range(1, n + 1)):
                return False
        return True
    return len(set(sq)) == n


__all__ = [
    "SymplecticChar", "symbolic_char", "theta_char", "eval_a", "eval_half_long", "eval_torus",
    "delta_half", "delta_quarter", "weyl_act", "admissibility", "AdmissibilityReport", "U", "GLRoot",
]
