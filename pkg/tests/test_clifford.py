import pytest

from metacs.clifford import (
    PinMatrix, basis, clifford_relations_hold, contract, gamma_character, generator_matrix, group_elements,
    hom_dim, image_support, monomial_action, monomial_product, projector, rank, wedge,
)
from metacs.exactalg import GaussRat, I


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_clifford_relations(k):
    assert clifford_relations_hold(k)


def test_generators_square_to_one():
    for j in range(1, 5):
        g = generator_matrix(j, 2)
        assert g * g == PinMatrix.identity(2)
    with pytest.raises(ValueError):
        generator_matrix(5, 2)


def test_wedge_and_contraction():
    k = 2
    w1, c1 = wedge(1, k), contract(1, k)
    assert w1 * w1 == PinMatrix.zero(k)
    # f'_1 f_1 + f_1 f'_1 acts as 2 (f'_1 | f_1) = 4
    assert w1 * c1 + c1 * w1 == PinMatrix.identity(k).scale(4)
    assert basis(2) == [frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_monomial_eigenvalues(k):
    for idx, sign in group_elements(k):
        m = monomial_product(idx, sign, k)
        assert m.is_diagonal()
        assert m == monomial_action(idx, sign, k)
        # f_empty carries sign (-i)^r
        assert m.diagonal()[0] == GaussRat(sign) * (-I) ** len(idx)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("conj", [False, True])
def test_hom_space_is_one_dimensional(k, conj):
    P = projector(k, conj)
    assert P * P == P
    assert rank(P) == hom_dim(k, conj) == 1


def test_image_lines():
    assert image_support(2) == [frozenset()]
    assert image_support(2, conj=True) == [frozenset({1, 2})]


def test_character_values():
    assert gamma_character((1,), 1) == -I
    assert gamma_character((1, 2), -1) == GaussRat(1)
    assert gamma_character((1,), 1, conj=True) == I


def test_validation():
    with pytest.raises(ValueError):
        monomial_action((1, 1), 1, 2)
    with pytest.raises(ValueError):
        hom_dim(0)
