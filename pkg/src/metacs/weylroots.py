"""Weyl groups of GL_n and Sp_2k, their roots, and the embedding W(Sp_2k) -> S_2k.

Permutations are stored 0-based: ``perm[a] = w(a+1) - 1``. Roots use the
1-based labels of the mathematics. Products compose as functions,
``(w*v)(a) = w(v(a))``, which matches multiplication of permutation
matrices with ``P_w e_j = e_{w(j)}``.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product


@dataclass(frozen=True, order=True)
class GLRoot:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("not a root")

    @property
    def positive(self):
        return self.i < self.j

    def neg(self):
        return GLRoot(self.j, self.i)


@dataclass(frozen=True, order=True)
class SpRoot:
    """A root of Sp_2k as an integer vector in Z^k."""
    vec: tuple

    @property
    def k(self):
        return len(self.vec)

    @property
    def positive(self):
        return next(x for x in self.vec if x) > 0

    @property
    def is_long(self):
        return sum(abs(x) for x in self.vec) == 2 and max(abs(x) for x in self.vec) == 2

    def neg(self):
        return SpRoot(tuple(-x for x in self.vec))

    def label(self):
        """('m', i, j) for e_i - e_j, ('p', i, j) for e_i + e_j, ('l', i) for 2e_i."""
        v = self.vec
        nz = [a + 1 for a, x in enumerate(v) if x]
        if len(nz) == 1:
            return ("l", nz[0]) if v[nz[0] - 1] > 0 else ("-l", nz[0])
        i, j = nz
        a, b = v[i - 1], v[j - 1]
        if a > 0 and b < 0:
            return ("m", i, j)
        if a > 0 and b > 0:
            return ("p", i, j)
        return ("-" + ("m" if b > 0 else "p"), i, j)


def sp_root(k, kind, i, j=None):
    v = [0] * k
    if kind == "l":
        v[i - 1] = 2
    elif kind == "m":
        v[i - 1], v[j - 1] = 1, -1
    elif kind == "p":
        v[i - 1], v[j - 1] = 1, 1
    else:
        raise ValueError(kind)
    return SpRoot(tuple(v))


@dataclass(frozen=True)
class WeylGL:
    perm: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"not a permutation: {self.perm}")

    @property
    def n(self):
        return len(self.perm)

    def __call__(self, a):
        """Image of the 1-based index a."""
        return self.perm[a - 1] + 1

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("permutations of different sizes")
        return WeylGL(tuple(self.perm[b] for b in other.perm))

    def inverse(self):
        inv = [0] * self.n
        for a, b in enumerate(self.perm):
            inv[b] = a
        return WeylGL(tuple(inv))

    def act(self, alpha):
        return GLRoot(self(alpha.i), self(alpha.j))

    def length(self):
        p = self.perm
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if p[a] > p[b])

    def inversions(self, of_inverse=False):
        """Positive roots alpha with w(alpha) < 0 (or w^{-1}(alpha) < 0)."""
        w = self.inverse() if of_inverse else self
        return [GLRoot(i, j) for i, j in _pairs(self.n) if w(i) > w(j)]

    def right_descent(self, i):
        """True when l(w s_i) < l(w)."""
        return self.perm[i - 1] > self.perm[i]

    def reduced_word(self, strategy="first"):
        """Indices i_1..i_l with w = s_{i_1} ... s_{i_l}."""
        w, word = self, []
        while True:
            ds = [i for i in range(1, self.n) if w.right_descent(i)]
            if not ds:
                break
            i = ds[0] if strategy == "first" else ds[-1]
            word.append(i)
            w = w * simple_reflection(self.n, i)
        return list(reversed(word))

    def matrix(self):
        m = [[0] * self.n for _ in range(self.n)]
        for j, a in enumerate(self.perm):
            m[a][j] = 1
        return m


def _pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def identity(n):
    return WeylGL(tuple(range(n)))


def simple_reflection(n, i):
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return WeylGL(tuple(p))


def longest(n):
    return WeylGL(tuple(reversed(range(n))))


def gl_positive_roots(n):
    return [GLRoot(i, j) for i, j in _pairs(n)]


@lru_cache(maxsize=None)
def all_gl(n):
    return [WeylGL(p) for p in permutations(range(n))]


@dataclass(frozen=True)
class WeylSp:
    """Signed permutation: e_i -> signs[i] * e_{perm[i]+1} (0-based storage)."""
    perm: tuple
    signs: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    @property
    def k(self):
        return len(self.perm)

    def act(self, root):
        out = [0] * self.k
        for i, x in enumerate(root.vec):
            if x:
                out[self.perm[i]] += self.signs[i] * x
        return SpRoot(tuple(out))

    def __mul__(self, other):
        perm = tuple(self.perm[other.perm[i]] for i in range(self.k))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.k))
        return WeylSp(perm, signs)

    def inverse(self):
        perm = [0] * self.k
        signs = [0] * self.k
        for i, (t, s) in enumerate(zip(self.perm, self.signs)):
            perm[t] = i
            signs[t] = s
        return WeylSp(tuple(perm), tuple(signs))

    def sp_inversions(self):
        return [a for a in sp_positive_roots(self.k) if not self.act(a).positive]

    def sp_length(self):
        return len(self.sp_inversions())


def sp_positive_roots(k):
    out = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            out.append(sp_root(k, "m", i, j))
            out.append(sp_root(k, "p", i, j))
        out.append(sp_root(k, "l", i))
    return out


@lru_cache(maxsize=None)
def all_sp(k):
    return [WeylSp(p, s) for p in permutations(range(k)) for s in product((1, -1), repeat=k)]


def embed_sp(w):
    """Image of a signed permutation in S_2k.

    Coordinate a <= k carries e_a and coordinate 2k+1-a carries -e_a.
    """
    k = w.k
    n = 2 * k
    img = [0] * n
    for i in range(k):
        t = w.perm[i]
        if w.signs[i] == 1:
            img[i], img[n - 1 - i] = t, n - 1 - t
        else:
            img[i], img[n - 1 - i] = n - 1 - t, t
    return WeylGL(tuple(img))


def sp_generators(k):
    """Simple reflections of Sp_2k as signed permutations.

    Index i < k swaps e_i and e_{i+1}; index k negates e_k.
    """
    gens = []
    for i in range(1, k):
        p = list(range(k))
        p[i - 1], p[i] = p[i], p[i - 1]
        gens.append(WeylSp(tuple(p), (1,) * k))
    gens.append(WeylSp(tuple(range(k)), (1,) * (k - 1) + (-1,)))
    return gens


def _coord(n, a):
    """Signed Sp coordinate of the GL index a: (+1, a) or (-1, n+1-a)."""
    k = n // 2
    return (1, a) if a <= k else (-1, n + 1 - a)


def gl_to_sp(root, k):
    """The Sp root restricting the GL root (i, j) on the symplectic torus."""
    n = 2 * k
    v = [0] * k
    for sgn, (s, a) in ((1, _coord(n, root.i)), (-1, _coord(n, root.j))):
        v[a - 1] += sgn * s
    if not any(v):
        raise ValueError(f"{root} restricts to zero")
    return SpRoot(tuple(v))


def sp_to_gl(root):
    """A GL root lying over the Sp root, with both indices meaningful.

    e_i - e_j -> (i, j), e_i + e_j -> (i, n+1-j), 2e_i -> (i, n+1-i),
    and negatives map to negatives.
    """
    k = root.k
    n = 2 * k
    lab = root.label()
    kind = lab[0].lstrip("-")
    i = lab[1]
    if kind == "l":
        r = GLRoot(i, n + 1 - i)
    elif kind == "m":
        r = GLRoot(i, lab[2])
    else:
        r = GLRoot(i, n + 1 - lab[2])
    return r.neg() if lab[0].startswith("-") else r


def sp_length(w):
    return w.sp_length()
