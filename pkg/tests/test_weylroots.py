from functools import reduce
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from metacs.weylroots import (
    GLRoot, WeylGL, WeylSp, all_gl, all_sp, embed_sp, gl_to_sp, identity, longest,
    simple_reflection, sp_generators, sp_positive_roots, sp_root, sp_to_gl,
)


def gl_perms(n):
    return st.permutations(list(range(n))).map(lambda p: WeylGL(tuple(p)))


def sp_elements(k):
    return st.tuples(st.permutations(list(range(k))), st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k)).map(
        lambda t: WeylSp(tuple(t[0]), tuple(t[1])))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_gl_group_size_and_longest(n):
    ws = all_gl(n)
    assert len(set(ws)) == factorial(n)
    assert max(w.length() for w in ws) == n * (n - 1) // 2 == longest(n).length()
    assert sum(1 for w in ws if w.length() == 0) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(gl_perms), st.sampled_from(["first", "last"]))
def test_reduced_word_multiplies_back(w, strategy):
    word = w.reduced_word(strategy)
    assert len(word) == w.length()
    prod = reduce(lambda a, i: a * simple_reflection(w.n, i), word, identity(w.n))
    assert prod == w


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(gl_perms))
def test_inversions_are_positive_roots_sent_negative(w):
    inv = w.inversions()
    assert len(inv) == w.length()
    assert all(r.positive and not w.act(r).positive for r in inv)
    assert set(w.inverse().inversions()) == set(w.inversions(of_inverse=True))
    assert w.inverse().length() == w.length()


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(gl_perms(n), gl_perms(n))))
def test_gl_product_is_composition(pair):
    w, v = pair
    assert all((w * v)(a) == w(v(a)) for a in range(1, w.n + 1))
    assert (w * w.inverse()) == identity(w.n)


def test_right_descent_lowers_length():
    for w in all_gl(4):
        for i in range(1, 4):
            assert w.right_descent(i) == ((w * simple_reflection(4, i)).length() < w.length())


def test_matrix_sends_basis_vector_to_image():
    w = WeylGL((2, 0, 1))
    m = w.matrix()
    for j in range(3):
        assert [m[a][j] for a in range(3)] == [1 if a == w.perm[j] else 0 for a in range(3)]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sp_group_size_and_root_count(k):
    assert len(set(all_sp(k))) == 2 ** k * factorial(k)
    assert len(sp_positive_roots(k)) == k * k
    assert max(w.sp_length() for w in all_sp(k)) == k * k


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sp_generators_generate(k):
    gens = sp_generators(k)
    seen = {WeylSp(tuple(range(k)), (1,) * k)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                x = w * g
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    assert seen == set(all_sp(k))
    assert all(g.sp_length() == 1 for g in gens)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.tuples(sp_elements(k), sp_elements(k))))
def test_embedding_is_a_homomorphism(pair):
    w, v = pair
    assert embed_sp(w * v) == embed_sp(w) * embed_sp(v)
    assert embed_sp(w.inverse()) == embed_sp(w).inverse()
    assert (w * w.inverse()).sp_length() == 0


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(sp_elements))
def test_sp_action_matches_embedded_action(w):
    k = w.k
    g = embed_sp(w)
    for a in sp_positive_roots(k):
        r = sp_to_gl(a)
        assert gl_to_sp(g.act(r), k) == w.act(a)
        assert w.act(a).positive == g.act(r).positive


def test_root_labels_and_round_trip():
    k = 3
    assert sp_root(k, "l", 2).label() == ("l", 2)
    assert sp_root(k, "m", 1, 3).label() == ("m", 1, 3)
    assert sp_root(k, "p", 1, 2).neg().label() == ("-p", 1, 2)
    for a in sp_positive_roots(k):
        assert gl_to_sp(sp_to_gl(a), k) == a
        assert gl_to_sp(sp_to_gl(a.neg()), k) == a.neg()
    assert sp_to_gl(sp_root(k, "l", 1)) == GLRoot(1, 6)
    with pytest.raises(ValueError):
        gl_to_sp(GLRoot(1, 1), k)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        WeylGL((0, 0))
    with pytest.raises(ValueError):
        WeylSp((0, 1), (1, 2))
    with pytest.raises(ValueError):
        GLRoot(2, 2)
