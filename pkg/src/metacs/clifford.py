"""Spin module of the Clifford algebra C(2k) on the exterior algebra of X = span(f_1..f_k).

f_i = e_i + i e_{i+k} acts by exterior multiplication, f'_i = e_i - i e_{i+k}
by contraction, with (f'_i | f_j) = 2 delta_ij and contraction carrying a
further factor 2.
"""

from itertools import combinations, product

from .exactalg import GaussRat, I

ZERO = GaussRat(0)
ONE = GaussRat(1)


def basis(k):
    """Subsets of {1..k} ordered by size, then lexicographically."""
    return [frozenset(c) for r in range(k + 1) for c in combinations(range(1, k + 1), r)]


class PinMatrix:
    __slots__ = ("k", "rows")

    def __init__(self, k, rows):
        self.k = k
        self.rows = [list(r) for r in rows]

    @property
    def dim(self):
        return len(self.rows)

    @classmethod
    def zero(cls, k):
        d = 2 ** k
        return cls(k, [[ZERO] * d for _ in range(d)])

    @classmethod
    def identity(cls, k):
        m = cls.zero(k)
        for a in range(m.dim):
            m.rows[a][a] = ONE
        return m

    def __add__(self, other):
        return PinMatrix(self.k, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self + other.scale(GaussRat(-1))

    def scale(self, c):
        c = GaussRat._of(c)
        return PinMatrix(self.k, [[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, PinMatrix):
            return self.scale(other)
        d = self.dim
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            nz = [(j, a) for j, a in enumerate(r) if a]
            out.append([sum((a * cols[c][j] for j, a in nz), ZERO) for c in range(d)])
        return PinMatrix(self.k, out)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, PinMatrix) and self.rows == other.rows

    def is_diagonal(self):
        return all(not self.rows[a][b] for a in range(self.dim) for b in range(self.dim) if a != b)

    def diagonal(self):
        return [self.rows[a][a] for a in range(self.dim)]


def _index(k):
    return {s: a for a, s in enumerate(basis(k))}


def wedge(i, k):
    """Phi_{f_i}: f_J -> f_i ^ f_J."""
    idx = _index(k)
    m = PinMatrix.zero(k)
    for J, a in idx.items():
        if i in J:
            continue
        sign = -1 if sum(1 for j in J if j < i) % 2 else 1
        m.rows[idx[J | {i}]][a] = GaussRat(sign)
    return m


def contract(i, k):
    """Phi_{f'_i}: contraction by f'_i with (f'_i | f_i) = 2 and factor 2."""
    idx = _index(k)
    m = PinMatrix.zero(k)
    for J, a in idx.items():
        if i not in J:
            continue
        sign = -1 if sum(1 for j in J if j < i) % 2 else 1
        m.rows[idx[J - {i}]][a] = GaussRat(4 * sign)
    return m


def generator_matrix(j, k):
    if not 1 <= j <= 2 * k:
        raise ValueError(f"generator index {j} out of range 1..{2 * k}")
    if j <= k:
        return (wedge(j, k) + contract(j, k)).scale(GaussRat(1, 0) / 2)
    i = j - k
    return (wedge(i, k) - contract(i, k)).scale((2 * I).inverse())


def monomial_product(indices, sign, k):
    """sign * e_{i1} e_{i1+k} ... e_{ir} e_{ir+k} as a product of generator matrices."""
    m = PinMatrix.identity(k).scale(sign)
    for i in indices:
        m = m * generator_matrix(i, k) * generator_matrix(i + k, k)
    return m


def monomial_action(indices, sign, k):
    """Closed form: diagonal with entries sign (-i)^r (-1)^{|J cap I|}."""
    indices = list(indices)
    if len(set(indices)) != len(indices):
        raise ValueError("indices must be distinct")
    r = len(indices)
    base = GaussRat(sign) * (-I) ** r
    m = PinMatrix.zero(k)
    for a, J in enumerate(basis(k)):
        s = -1 if len(J & set(indices)) % 2 else 1
        m.rows[a][a] = base * s
    return m


def gamma_character(indices, sign, conj=False):
    """Genuine character value sign * (-c)^r where c = gamma(-1) = +i (or -i)."""
    c = -I if conj else I
    return GaussRat(sign) * (-c) ** len(list(indices))


def group_elements(k):
    for sign in (1, -1):
        for r in range(k + 1):
            for idx in combinations(range(1, k + 1), r):
                yield idx, sign


def projector(k, conj=False):
    """(1/|G|) sum_g gamma(g)^{-1} sigma(g), sigma from generator products."""
    total = PinMatrix.zero(k)
    count = 0
    for idx, sign in group_elements(k):
        total = total + monomial_product(idx, sign, k).scale(gamma_character(idx, sign, conj).inverse())
        count += 1
    return total.scale(GaussRat(1) / count)


def rank(m):
    rows = [list(r) for r in m.rows]
    n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
    rk = 0
    for c in range(n_cols):
        piv = next((r for r in range(rk, n_rows) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = rows[rk][c].inverse()
        for r in range(n_rows):
            if r != rk and rows[r][c]:
                f = rows[r][c] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rk])]
        rk += 1
    return rk


def hom_dim(k, conj=False):
    if not 1 <= k <= 5:
        raise ValueError("k must be between 1 and 5")
    return rank(projector(k, conj))


def image_support(k, conj=False):
    """Basis vectors f_J hit by the projector."""
    P = projector(k, conj)
    return [J for a, J in enumerate(basis(k)) if any(P.rows[a])]


def clifford_relations_hold(k):
    gens = [generator_matrix(j, k) for j in range(1, 2 * k + 1)]
    eye = PinMatrix.identity(k)
    zero = PinMatrix.zero(k)
    for a, b in product(range(2 * k), repeat=2):
        anti = gens[a] * gens[b] + gens[b] * gens[a]
        if anti != (eye.scale(2) if a == b else zero):
            return False
    return True
