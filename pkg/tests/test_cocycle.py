import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from metacs import cocycle as cc
from metacs.cocycle import MetaMonomial, MonomialMatrix
from metacs.padicweil import hilbert2
from metacs.suites import random_meta, random_monomial, random_unit
from metacs.weylroots import WeylGL, all_gl, identity, simple_reflection

PN = list(product([5, 7, 11], [2, 4, 6]))


def scalars(p):
    unit = st.integers(1, 50).filter(lambda a: a % p)
    return st.builds(lambda s, a, b, v: s * Fraction(a, b) * Fraction(p) ** v,
                     st.sampled_from((1, -1)), unit, unit, st.integers(-3, 3))


def metas(p, n):
    return st.builds(lambda e, t, w: MetaMonomial(e, tuple(t), WeylGL(tuple(w)), p),
                     st.sampled_from((1, -1)), st.lists(scalars(p), min_size=n, max_size=n),
                     st.permutations(list(range(n))))


def monomials(p, n):
    return metas(p, n).map(lambda m: m.project())


# formula examples

def test_kubota_examples():
    w = [[0, -1], [1, 0]]
    one = [[1, 0], [0, 1]]
    for p in (3, 5, 7):
        assert cc.kubota(one, one, p) == 1
        assert cc.kubota(w, w, p) == hilbert2(-1, -1, p) == 1
        a, b, a2, b2 = Fraction(5), Fraction(3, 7), Fraction(-7), Fraction(2)
        assert cc.kubota([[a, 0], [0, b]], [[a2, 0], [0, b2]], p) == hilbert2(a, b2, p)


def test_sigma_torus_and_block_examples():
    p = 7
    t = (Fraction(7), Fraction(3), Fraction(14))
    assert cc.sigma_torus(t, (1, 1, 1), p) == 1
    assert cc.sigma_torus(t[:2], (5, 7), p) == hilbert2(7, 7, p)
    one = MonomialMatrix.torus((1,))
    assert cc.sigma_block(one, one, one, one, p) == 1
    a, b, a2, b2 = (MonomialMatrix.torus((x,)) for x in (7, 3, 5, 7))
    assert cc.sigma_block(a, b, a2, b2, p) == hilbert2(7, 7, p) == -1


def test_sigma_weyl_torus_examples():
    p = 7
    s1 = simple_reflection(2, 1)
    a, b = Fraction(3), Fraction(7)
    assert cc.sigma_weyl_torus(s1, (a, b), p) == hilbert2(-b, a, p)
    assert cc.sigma_weyl_torus(identity(3), (7, 7, 7), p) == 1
    # entries in F^{*2} O^* give trivial symbols
    assert cc.sigma_weyl_torus(WeylGL((2, 1, 0)), (49, 3, Fraction(1, 49)), p) == 1


def test_group_examples():
    p = 7
    t, t2 = (Fraction(7), Fraction(3)), (Fraction(5), Fraction(14))
    got = cc.mul(cc.torus_lift(t, p), cc.torus_lift(t2, p))
    assert got == cc.torus_lift((35, 42), p).signed(cc.sigma_torus(t, t2, p))
    m = random_meta(random.Random(0), 4, p)
    assert cc.mul(cc.meta_identity(4, p), m) == m == cc.mul(m, cc.meta_identity(4, p))
    s = cc.weyl_lift(simple_reflection(2, 1), p)
    assert cc.mul(s, s) == cc.torus_lift((-1, -1), p).signed(hilbert2(-1, -1, p))
    assert cc.section_s(MonomialMatrix.torus((1, 1, 1, 1)), p) == cc.meta_identity(4, p)


def test_canonical_rep_is_word_independent():
    for n in (2, 3, 4, 5):
        for w in all_gl(n):
            assert cc.canonical_rep(w, "first") == cc.canonical_rep(w, "last")
            assert cc.canonical_rep(w).perm == w


def test_monomial_matrix_algebra():
    rng = random.Random(3)
    for _ in range(50):
        g, h = random_monomial(rng, 4, 5), random_monomial(rng, 4, 5)
        assert MonomialMatrix.from_dense(g.dense()) == g
        gd, hd = g.dense(), h.dense()
        prod = [[sum(gd[i][l] * hd[l][j] for l in range(4)) for j in range(4)] for i in range(4)]
        assert (g * h).dense() == prod
        assert (g * g.inverse()).dense() == MonomialMatrix.torus((1,) * 4).dense()
        assert (g * h).det() == g.det() * h.det()
    with pytest.raises(ValueError):
        MonomialMatrix.from_dense([[1, 1], [0, 1]])


# group engine properties

@pytest.mark.parametrize("p,n", PN)
def test_associativity(p, n):
    rng = random.Random(1000 * p + n)
    for _ in range(150):
        a, b, c = (random_meta(rng, n, p) for _ in range(3))
        assert cc.mul(cc.mul(a, b), c) == cc.mul(a, cc.mul(b, c))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PN).flatmap(lambda pn: st.tuples(metas(*pn), metas(*pn), metas(*pn))))
def test_associativity_property(triple):
    a, b, c = triple
    assert cc.mul(cc.mul(a, b), c) == cc.mul(a, cc.mul(b, c))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PN).flatmap(lambda pn: metas(*pn)))
def test_inverse(m):
    e = cc.meta_identity(m.n, m.p)
    assert cc.mul(m, cc.inv(m)) == e == cc.mul(cc.inv(m), m)
    assert m.project() * cc.inv(m).project() == MonomialMatrix.torus((1,) * m.n)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PN).flatmap(lambda pn: st.tuples(st.just(pn[0]), st.lists(scalars(pn[0]), min_size=pn[1], max_size=pn[1]),
                                                        st.lists(scalars(pn[0]), min_size=pn[1], max_size=pn[1]))))
def test_torus_commutator(data):
    p, t, t2 = data
    n = len(t)
    a, b = cc.torus_lift(t, p), cc.torus_lift(t2, p)
    c = cc.mul(cc.mul(a, b), cc.inv(cc.mul(b, a)))
    want = 1
    for i in range(n):
        for j in range(i + 1, n):
            want *= hilbert2(t[i], t2[j], p) * hilbert2(t2[i], t[j], p)
    assert c == cc.meta_identity(n, p).signed(want)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PN).flatmap(lambda pn: st.tuples(st.just(pn[0]), st.permutations(list(range(pn[1]))),
                                                        st.lists(scalars(pn[0]), min_size=pn[1], max_size=pn[1]))))
def test_weyl_torus_conjugation(data):
    p, w, t = data
    w = WeylGL(tuple(w))
    lhs = cc.mul(cc.weyl_lift(w, p), cc.torus_lift(t, p))
    rhs = cc.mul(cc.torus_lift(cc.conj_torus(w, t), p), cc.weyl_lift(w, p))
    assert lhs == rhs.signed(cc.sigma_weyl_torus(w, t, p))


@pytest.mark.parametrize("p,n", PN)
def test_central_conjugation(p, n):
    rng = random.Random(p * n)
    for _ in range(30):
        w = WeylGL(tuple(rng.sample(range(n), n)))
        t = tuple(random_unit(rng, p) * Fraction(p) ** (2 * rng.randint(-1, 1)) for _ in range(n))
        s = cc.section_s(MonomialMatrix((1,) * n, w), p)
        assert cc.mul(cc.mul(s, cc.torus_lift(t, p)), cc.inv(s)) == cc.torus_lift(cc.conj_torus(w, t), p)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7]).flatmap(lambda p: st.tuples(st.just(p), monomials(p, 2), monomials(p, 2))))
def test_engine_matches_kubota(data):
    p, g, h = data
    assert cc.engine_cocycle(g, h, p) == cc.kubota(g.dense(), h.dense(), p)


@pytest.mark.parametrize("p,n", PN)
def test_block_compatibility(p, n):
    rng = random.Random(7 * p + n)
    for _ in range(25):
        k = rng.randint(1, n - 1)
        a, b, a2, b2 = (random_monomial(rng, m, p) for m in (k, n - k, k, n - k))
        assert cc.engine_cocycle(cc.block_diag(a, b), cc.block_diag(a2, b2), p) == cc.sigma_block(a, b, a2, b2, p)
        ta, tb, ta2, tb2 = (MonomialMatrix.torus(x.diag) for x in (a, b, a2, b2))
        assert cc.sigma_block(ta, tb, ta2, tb2, p) == cc.sigma_torus(ta.diag + tb.diag, ta2.diag + tb2.diag, p)


def test_twisted_cocycle_flag():
    rng = random.Random(11)
    for _ in range(20):
        g, h = random_monomial(rng, 4, 7), random_monomial(rng, 4, 7)
        assert cc.engine_cocycle(g, h, 7, twisted=True) == cc.engine_cocycle(g, h, 7) * hilbert2(g.det(), h.det(), 7)


# the sections on the Shalika subgroup

@pytest.mark.parametrize("p,n", PN)
def test_triangle_relation(p, n):
    rng = random.Random(13 * p + n)
    k = n // 2
    for _ in range(30):
        c, c2 = random_monomial(rng, k, p), random_monomial(rng, k, p)
        lhs = cc.triangle(c * c2, p)
        assert lhs == cc.mul(cc.triangle(c, p), cc.triangle(c2, p)).signed(hilbert2(c.det(), c2.det(), p))


@pytest.mark.parametrize("p,n", PN)
def test_h_section_twisted_splitting(p, n):
    rng = random.Random(17 * p + n)
    k = n // 2
    for _ in range(30):
        c, c2 = random_monomial(rng, k, p), random_monomial(rng, k, p)
        h, h2 = cc.h_from_component(c), cc.h_from_component(c2)
        assert cc.in_H(h, k) and cc.h_component(h, k) == c
        lhs = cc.section_h(h * h2, p)
        assert lhs == cc.mul(cc.section_h(h, p), cc.section_h(h2, p)).signed(hilbert2(c.det(), c2.det(), p))


@pytest.mark.parametrize("p,n", PN)
def test_h_agrees_with_s_on_borel_part(p, n):
    rng = random.Random(19 * p + n)
    k = n // 2
    for _ in range(30):
        c = MonomialMatrix.torus(tuple(random_unit(rng, p) * Fraction(p) ** (2 * rng.randint(-1, 1)) for _ in range(k)))
        h = cc.h_from_component(c)
        assert h.is_diagonal()
        assert cc.section_h(h, p) == cc.section_s(h, p)


def test_section_h_rejects_elements_outside_H():
    g = MonomialMatrix.torus((2, 3, 5, 7))
    assert not cc.in_H(g, 2)
    with pytest.raises(ValueError):
        cc.section_h(g, 11)


def test_engine_input_validation():
    a = cc.meta_identity(2, 5)
    with pytest.raises(ValueError):
        cc.mul(a, cc.meta_identity(4, 5))
    with pytest.raises(ValueError):
        cc.mul(a, cc.meta_identity(2, 7))
    with pytest.raises(ValueError):
        MetaMonomial(2, (1, 1), identity(2), 5)
    with pytest.raises(ValueError):
        cc.torus_lift((0, 1), 5)
