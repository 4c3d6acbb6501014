from fractions import Fraction

import pytest

from doublesym.algebra import ONE, ZERO, ZERO_SPEC, a
from doublesym.basis import DoubleSym
from doublesym.shapes import Partition, as_skew, dim_and_hook, mn_character, partitions_of
from doublesym.transition import (
    TransitionMatrix,
    char_dual,
    char_poly,
    double_forgotten,
    double_monomial,
    e_hat_product,
    h_hat_product,
    hook_identities,
    kostka,
    kostka_dual,
    kostka_number,
    matrix,
    pairing,
    shifted_value_check,
)

UP_TO_4 = [p for k in range(1, 5) for p in partitions_of(k)]
SAME_SIZE = [(l, m) for k in range(1, 5) for l in partitions_of(k) for m in partitions_of(k)]


@pytest.mark.parametrize("lam,mu", SAME_SIZE)
def test_equal_sizes_are_classical(lam, mu):
    k = kostka_number(lam, mu)
    assert kostka_dual(lam, mu) == k * ONE
    assert kostka(lam, mu) == k * ONE
    assert char_poly(lam, mu) == mn_character(lam, mu) * ONE
    assert char_dual(lam, mu) == mn_character(lam, mu) * ONE


def test_kostka_dual_methods_agree():
    for lam in UP_TO_4:
        for mu in UP_TO_4:
            if mu.size <= lam.size:
                assert kostka_dual(lam, mu) == kostka_dual(lam, mu, method="lr")


def test_kostka_vanishes_outside_degree_range():
    assert kostka_dual((1,), (2,)) == ZERO
    assert kostka((1,), (2,)) == ZERO


@pytest.mark.parametrize("n", range(1, 6))
def test_characters_on_identity_class(n):
    for lam in partitions_of(n):
        assert char_poly(lam, (1,) * n) == dim_and_hook(as_skew(lam))[0] * ONE


def test_character_of_lower_degree():
    assert char_poly((1,), (1,)) == ONE
    assert char_poly((2,), (1,)) == ZERO
    assert char_dual((2,), (1,)) == -a(0)


@pytest.mark.parametrize("lam", UP_TO_4[:6])
def test_monomials_dual_to_complete(lam):
    D = 4
    m = double_monomial(lam)
    for mu in UP_TO_4:
        want = ONE if mu == lam else ZERO
        assert pairing(m, h_hat_product(mu, D)) == want


@pytest.mark.parametrize("lam", UP_TO_4[:6])
def test_forgotten_dual_to_elementary(lam):
    D = 4
    f = double_forgotten(lam)
    for mu in UP_TO_4:
        want = ONE if mu == lam else ZERO
        assert pairing(f, e_hat_product(mu, D)) == want


def test_monomials_at_zero_are_classical():
    m = double_monomial((2,))
    assert m == DoubleSym({(2,): ONE, (1, 1): -ONE})
    m3 = double_monomial((2, 1))
    assert {k: v.evaluate(ZERO_SPEC) for k, v in m3.items() if v.evaluate(ZERO_SPEC)} == {(2, 1): 1, (1, 1, 1): -2}


def test_character_hook_sum_example():
    report = hook_identities((3, 2), (2, 1, 1, 1))
    char = report[0]
    assert char["identity"] == "character" and char["value"] == 1
    assert [t for _, t in char["terms"]] == [
        Fraction(-5, 24), Fraction(16, 3), Fraction(27, 4), Fraction(-27), Fraction(64, 3), Fraction(-125, 24)
    ]
    assert all(r["ok"] for r in report)


@pytest.mark.parametrize("lam,mu", SAME_SIZE)
def test_hook_identities_match_oracles(lam, mu):
    assert all(r["ok"] for r in hook_identities(lam, mu))


@pytest.mark.parametrize("nu", [p for k in range(1, 5) for p in partitions_of(k)])
def test_lr_hook_identity_including_lower_degrees(nu):
    for lam in partitions_of(nu.size - 1):
        if nu.contains(lam):
            for mu in map(Partition, ((1,), (1, 1), (2,))):
                if nu.contains(mu) and nu.size <= lam.size + mu.size:
                    assert all(r["ok"] for r in hook_identities(lam, mu, nu))


def test_shifted_values():
    for nu in UP_TO_4:
        for mu in UP_TO_4:
            ok, got, want = shifted_value_check(mu, nu)
            assert ok, (mu, nu, got, want)


def test_transition_matrix_layout():
    M = matrix("kostka_dual", 2)
    assert isinstance(M, TransitionMatrix)
    assert M[(2,), (1, 1)] == ONE
    text = M.to_text()
    assert text.splitlines()[0].split() == ["()", "(1)", "(2)", "(1,1)"]
    assert text.splitlines()[2].split() == ["(1)", "0", "1", "0", "a[0]", "-", "a[1]"]
    assert M.to_json()["rows"] == [[], [1], [2], [1, 1]]
