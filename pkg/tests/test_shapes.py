from math import factorial

import pytest
from hypothesis import given

from doublesym.shapes import (
    EMPTY,
    Partition,
    SkewShape,
    as_skew,
    dim_and_hook,
    hook_partition,
    lr_coefficient,
    mn_character,
    parse_partition,
    parse_skew,
    partitions_between,
    partitions_of,
    schur_product,
    z_lambda,
)
from doublesym.tableaux import semistandard_tableaux, standard_tableaux
from strategies import partitions


def test_partition_counts():
    assert [len(list(partitions_of(k))) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@given(partitions(max_size=8))
def test_conjugation_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(partitions(max_size=8))
def test_frobenius_round_trip(lam):
    f = lam.frobenius()
    assert f.to_partition() == lam
    if lam:
        assert hook_partition(f.alpha[0], f.beta[0]).size == f.alpha[0] + f.beta[0] + 1


def test_parsing():
    assert parse_partition("3,2,1") == Partition((3, 2, 1))
    for empty in ("", "0", "()"):
        assert parse_partition(empty) == EMPTY
    assert str(parse_skew("3,2/1")) == "3,2/1"
    assert str(Partition((3, 1)).frobenius()) == "(2|1)"
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_skew("2/3")


@pytest.mark.parametrize("n", range(1, 7))
def test_sum_of_squared_dimensions(n):
    assert sum(dim_and_hook(as_skew(lam))[0] ** 2 for lam in partitions_of(n)) == factorial(n)


@given(partitions(max_size=6))
def test_dimension_matches_standard_tableaux(lam):
    dim, H = dim_and_hook(as_skew(lam))
    assert dim == len(list(standard_tableaux(as_skew(lam))))
    assert dim * H == factorial(lam.size)


@pytest.mark.parametrize("n", range(1, 6))
def test_character_orthogonality(n):
    parts = list(partitions_of(n))
    for mu in parts:
        for nu in parts:
            total = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
            assert total == (z_lambda(mu) if mu == nu else 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_characters_at_identity_are_dimensions(n):
    for lam in partitions_of(n):
        assert mn_character(lam, (1,) * n) == dim_and_hook(as_skew(lam))[0]


def test_littlewood_richardson_examples():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert schur_product((1,), (1,)) == {Partition((2,)): 1, Partition((1, 1)): 1}


@given(partitions(max_size=3), partitions(max_size=3))
def test_lr_symmetry_and_conjugation(lam, mu):
    prod = schur_product(lam, mu)
    assert prod == schur_product(mu, lam)
    conj = schur_product(lam.conjugate(), mu.conjugate())
    assert {nu.conjugate(): c for nu, c in prod.items()} == conj
    # dimension of the induced representation
    d = dim_and_hook(as_skew(lam))[0] * dim_and_hook(as_skew(mu))[0]
    n = lam.size + mu.size
    ind = factorial(n) // (factorial(lam.size) * factorial(mu.size)) * d
    assert sum(c * dim_and_hook(as_skew(nu))[0] for nu, c in prod.items()) == ind


def test_skew_tableaux_count_is_skew_kostka_sum():
    theta = SkewShape(Partition((2, 1)), Partition((1,)))
    assert len(list(semistandard_tableaux(theta, 2))) == 4


def test_partitions_between():
    got = list(partitions_between((1,), (2, 1)))
    assert got == [Partition((1,)), Partition((2,)), Partition((1, 1)), Partition((2, 1))]
