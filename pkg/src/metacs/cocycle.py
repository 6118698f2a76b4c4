"""The metaplectic double cover of GL_n restricted to monomial matrices.

An element is eps * s(t) * s(w) with t diagonal and w the canonical Weyl
representative of a permutation. Products are reduced to this normal form
using the torus cocycle, the Weyl-torus conjugation sign, and, at each
descent of a reduced word, the square of a rank-one Weyl representative.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .padicweil import hilbert2
from .weylroots import WeylGL, identity, simple_reflection


def _frac(x):
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero entry in a torus element")
    return x


@dataclass(frozen=True)
class MonomialMatrix:
    """diag(d) * P_w, with P_w e_j = e_{w(j)}."""
    diag: tuple
    perm: WeylGL

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(_frac(x) for x in self.diag))
        if len(self.diag) != self.perm.n:
            raise ValueError("size mismatch")

    @property
    def n(self):
        return len(self.diag)

    def __mul__(self, other):
        moved = conj_torus(self.perm, other.diag)
        return MonomialMatrix(tuple(a * b for a, b in zip(self.diag, moved)), self.perm * other.perm)

    def inverse(self):
        winv = self.perm.inverse()
        return MonomialMatrix(conj_torus(winv, tuple(1 / x for x in self.diag)), winv)

    def det(self):
        d = Fraction(1)
        for x in self.diag:
            d *= x
        return d * (-1 if self.perm.length() % 2 else 1)

    def dense(self):
        n = self.n
        m = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            a = self.perm.perm[j]
            m[a][j] = self.diag[a]
        return m

    @classmethod
    def from_dense(cls, m):
        n = len(m)
        perm = [None] * n
        diag = [None] * n
        for j in range(n):
            rows = [a for a in range(n) if m[a][j] != 0]
            if len(rows) != 1:
                raise ValueError("not a monomial matrix")
            perm[j] = rows[0]
            diag[rows[0]] = Fraction(m[rows[0]][j])
        if sorted(perm) != list(range(n)):
            raise ValueError("not a monomial matrix")
        return cls(tuple(diag), WeylGL(tuple(perm)))

    @classmethod
    def torus(cls, t):
        return cls(tuple(t), identity(len(t)))

    def is_diagonal(self):
        return self.perm.perm == tuple(range(self.n))


def conj_torus(w, t):
    """Diagonal of P_w diag(t) P_w^{-1}: entry t_j moves to position w(j)."""
    out = [None] * len(t)
    for j, x in enumerate(t):
        out[w.perm[j]] = x
    return tuple(out)


def rank_one_rep(n, i):
    """Image of (0,-1;1,0) in the rows and columns i, i+1."""
    d = [Fraction(1)] * n
    d[i - 1] = Fraction(-1)
    return MonomialMatrix(tuple(d), simple_reflection(n, i))


@lru_cache(maxsize=None)
def _canonical(w, strategy):
    m = MonomialMatrix((1,) * w.n, identity(w.n))
    for i in w.reduced_word(strategy):
        m = m * rank_one_rep(w.n, i)
    assert m.perm == w
    return m


def canonical_rep(w, strategy="first"):
    """The representative in the fixed set of Weyl elements, a signed permutation matrix."""
    return _canonical(w, strategy)


# cocycle formulas

def sigma_torus(t, t2, p):
    """prod_{i<j} (t_i, t2_j)_2."""
    s = 1
    n = len(t)
    for i in range(n):
        for j in range(i + 1, n):
            s *= hilbert2(t[i], t2[j], p)
    return s


def sigma_weyl_torus(w, t, p):
    """prod over (i, j) > 0 with w(i) > w(j) of (-t_j, t_i)_2."""
    s = 1
    for r in w.inversions():
        s *= hilbert2(-Fraction(t[r.j - 1]), t[r.i - 1], p)
    return s


def _x(g):
    return g[1][0] if g[1][0] != 0 else g[1][1]


def _mat2_mul(g, h):
    return [[g[0][0] * h[0][0] + g[0][1] * h[1][0], g[0][0] * h[0][1] + g[0][1] * h[1][1]],
            [g[1][0] * h[0][0] + g[1][1] * h[1][0], g[1][0] * h[0][1] + g[1][1] * h[1][1]]]


def kubota(g, g2, p):
    """Kubota's cocycle on GL_2: (x(gg')/x(g), x(gg')/(x(g') det g))_2."""
    g = [[Fraction(a) for a in row] for row in g]
    g2 = [[Fraction(a) for a in row] for row in g2]
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    if det == 0 or g2[0][0] * g2[1][1] - g2[0][1] * g2[1][0] == 0:
        raise ValueError("singular matrix")
    gg = _mat2_mul(g, g2)
    xgg = _x(gg)
    return hilbert2(xgg / _x(g), xgg / (_x(g2) * det), p)


def engine_cocycle(g, g2, p, twisted=False):
    """sigma(g, g2) for monomial matrices as computed by the group engine.

    twisted=True returns the variant (det g, det g2)_2 sigma(g, g2).
    """
    prod = mul(section_s(g, p), section_s(g2, p))
    ref = section_s(g * g2, p)
    assert prod.torus == ref.torus and prod.perm == ref.perm
    out = prod.eps * ref.eps
    if twisted:
        out *= hilbert2(g.det(), g2.det(), p)
    return out


def _blocks(m, k):
    """Split a block-diagonal monomial matrix into its k and n-k blocks."""
    n = m.n
    if any((j < k) != (m.perm.perm[j] < k) for j in range(n)):
        raise ValueError("not block diagonal")
    a = MonomialMatrix(m.diag[:k], WeylGL(m.perm.perm[:k]))
    b = MonomialMatrix(m.diag[k:], WeylGL(tuple(x - k for x in m.perm.perm[k:])))
    return a, b


def block_diag(a, b):
    k = a.n
    return MonomialMatrix(a.diag + b.diag, WeylGL(a.perm.perm + tuple(x + k for x in b.perm.perm)))


def sigma_block(a, b, a2, b2, p):
    """sigma_k(a, a') sigma_{n-k}(b, b') (det a, det b')_2, recursively.

    Blocks are monomial matrices; a 1x1 block has trivial cocycle and a
    larger block is split again at its first index.
    """
    if a.n != a2.n or b.n != b2.n:
        raise ValueError("incompatible block sizes")
    return _sigma_rec(a, a2, p) * _sigma_rec(b, b2, p) * hilbert2(a.det(), b2.det(), p)


def _sigma_rec(g, g2, p):
    if g.n == 1:
        return 1
    try:
        a, b = _blocks(g, 1)
        a2, b2 = _blocks(g2, 1)
    except ValueError:
        if g.n == 2:
            return kubota(g.dense(), g2.dense(), p)
        return engine_cocycle(g, g2, p)
    return sigma_block(a, b, a2, b2, p)


# the group engine

@dataclass(frozen=True)
class MetaMonomial:
    eps: int
    torus: tuple
    perm: WeylGL
    p: int

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +-1")
        object.__setattr__(self, "torus", tuple(_frac(x) for x in self.torus))
        if len(self.torus) != self.perm.n:
            raise ValueError("size mismatch")

    @property
    def n(self):
        return len(self.torus)

    def project(self):
        return MonomialMatrix(self.torus, identity(self.n)) * canonical_rep(self.perm)

    def __mul__(self, other):
        return mul(self, other)

    def signed(self, s):
        return MetaMonomial(self.eps * s, self.torus, self.perm, self.p)


def meta_identity(n, p):
    return MetaMonomial(1, (1,) * n, identity(n), p)


def torus_lift(t, p):
    return MetaMonomial(1, tuple(t), identity(len(t)), p)


def weyl_lift(w, p):
    return MetaMonomial(1, (1,) * w.n, w, p)


@lru_cache(maxsize=None)
def _rank_one_square_sign(p):
    w = [[0, -1], [1, 0]]
    return kubota(w, w, p)


def mul(m1, m2):
    if m1.n != m2.n:
        raise ValueError("mismatched n")
    if m1.p != m2.p:
        raise ValueError("mismatched p")
    p, n = m1.p, m1.n
    eps = m1.eps * m2.eps
    # s(w1) s(t2) = sigma(w1, t2) s(w1 t2 w1^{-1}) s(w1)
    eps *= sigma_weyl_torus(m1.perm, m2.torus, p)
    moved = conj_torus(m1.perm, m2.torus)
    eps *= sigma_torus(m1.torus, moved, p)
    t = [a * b for a, b in zip(m1.torus, moved)]
    w = m1.perm
    for i in m2.perm.reduced_word():
        s_i = simple_reflection(n, i)
        if not w.right_descent(i):
            w = w * s_i
            continue
        # s(w) s(w_i) = s(w') s(w_i)^2 with w = w' s_i length-additive
        w = w * s_i
        eps *= _rank_one_square_sign(p)
        h = [Fraction(1)] * n
        h[i - 1] = h[i] = Fraction(-1)
        eps *= sigma_weyl_torus(w, h, p)
        hm = conj_torus(w, h)
        eps *= sigma_torus(t, hm, p)
        t = [a * b for a, b in zip(t, hm)]
    return MetaMonomial(eps, tuple(t), w, p)


def _torus_inverse(eps, t, p):
    tinv = tuple(1 / x for x in t)
    # s(t) s(t^{-1}) = sigma(t, t^{-1}) s(1)
    return MetaMonomial(eps * sigma_torus(t, tinv, p), tinv, identity(len(t)), p)


def inv(m):
    n, p = m.n, m.p
    winv = m.perm.inverse()
    y = mul(weyl_lift(m.perm, p), weyl_lift(winv, p))
    assert y.perm == identity(n)
    # s(w)^{-1} = s(w^{-1}) y^{-1}
    right = mul(_torus_inverse(y.eps, y.torus, p), _torus_inverse(m.eps, m.torus, p))
    out = mul(weyl_lift(winv, p), right)
    return out


def section_s(g, p):
    """s(g) for a monomial matrix g = t w, using sigma(t, w) = 1."""
    if not isinstance(g, MonomialMatrix):
        g = MonomialMatrix.from_dense(g)
    rep = canonical_rep(g.perm)
    t = tuple(a * b for a, b in zip(g.diag, rep.diag))
    return MetaMonomial(1, t, g.perm, p)


def omega(k):
    """(0, I_k; J_k, 0) with J_k the antidiagonal identity."""
    n = 2 * k
    perm = [0] * n
    for j in range(k):
        perm[j] = k + (k - 1 - j)  # column j of J_k block sits in rows k..2k-1
    for j in range(k, n):
        perm[j] = j - k
    return MonomialMatrix((1,) * n, WeylGL(tuple(perm)))


def triangle_matrix(c):
    """c^triangle = diag(c, c)."""
    return block_diag(c, c)


def triangle(c, p):
    return section_s(triangle_matrix(c), p)


def in_H(h, k):
    """True when omega^{-1} h omega = diag(c, c) for some c."""
    x = omega(k).inverse() * h * omega(k)
    try:
        a, b = _blocks(x, k)
    except ValueError:
        return False
    return a == b


def h_component(h, k):
    """The block c with h = omega diag(c, c) omega^{-1}."""
    x = omega(k).inverse() * h * omega(k)
    a, b = _blocks(x, k)
    if a != b:
        raise ValueError("element is not in H")
    return a


def section_h(h, p):
    """h(h) = s(omega) s(omega^{-1} h omega) s(omega)^{-1}."""
    if not isinstance(h, MonomialMatrix):
        h = MonomialMatrix.from_dense(h)
    k = h.n // 2
    c = h_component(h, k)
    so = section_s(omega(k), p)
    return mul(mul(so, section_s(triangle_matrix(c), p)), inv(so))


def h_from_component(c):
    k = c.n
    return omega(k) * triangle_matrix(c) * omega(k).inverse()


__all__ = [
    "MonomialMatrix", "MetaMonomial", "mul", "inv", "section_s", "section_h", "triangle",
    "sigma_torus", "sigma_weyl_torus", "sigma_block", "kubota", "engine_cocycle", "canonical_rep",
    "omega", "meta_identity", "torus_lift", "weyl_lift", "h_from_component", "h_component", "block_diag",
]
