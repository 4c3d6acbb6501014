import pytest
from hypothesis import given, settings

from doublesym.algebra import ONE, ZERO, a
from doublesym.errors import TruncationTooSmall, WrongBasis
from doublesym.flagged import phi, phi_determinant, phi_signed, psi_signed
from doublesym.series import (
    SchurSeries,
    dual_determinant,
    dual_ehp,
    dual_schur,
    omega_hat,
    schur_to_dual,
    series_mul,
    skew_dual_schur,
    skew_dual_via_lr,
)
from doublesym.shapes import Partition, SkewShape, n_boxes_below, partitions_of
from strategies import partitions

SMALL = [p for k in range(1, 4) for p in partitions_of(k)]


@pytest.mark.parametrize("mu", SMALL)
def test_dual_schur_methods_agree(mu):
    D = 5
    ref = dual_schur(mu, D, "flagged")
    assert dual_schur(mu, D, "determinant") == ref
    assert dual_schur(mu, D, "combinatorial", n=D) == ref
    assert dual_schur(mu, D, "alternant", n=D) == ref


def test_hook_coefficients_of_dual_s1():
    s1 = dual_schur((1,), 3)
    assert s1.coefficient((1,)) == ONE
    assert s1.coefficient((2,)) == a(0)
    assert s1.coefficient((1, 1)) == -a(1)
    assert s1.coefficient((2, 1)) == -a(0) * a(1)
    assert s1.coefficient((3, 1)) == ZERO  # beyond the truncation


def test_truncation_too_small():
    with pytest.raises(TruncationTooSmall):
        dual_schur((3,), 2)


@settings(max_examples=25, deadline=None)
@given(partitions(max_size=3))
def test_basis_change_round_trip(mu):
    D = 4
    s = dual_schur(mu, D)
    assert s.to_dual() == SchurSeries({mu: ONE}, D, "dual")
    assert s.to_dual().to_schur() == s
    assert schur_to_dual(mu, D).to_schur() == SchurSeries({mu: ONE}, D)


def test_phi_psi_are_inverse():
    D = 4
    lams = [p for k in range(D + 1) for p in partitions_of(k)]
    for lam in lams:
        for nu in lams:
            total = sum((phi_signed(lam, mu) * psi_signed(mu, nu) for mu in lams), ZERO)
            assert total == (ONE if lam == nu else ZERO)


@pytest.mark.parametrize("lam,mu", [((2,), (1,)), ((2, 1), (1,)), ((3, 1), (2,)), ((2, 2), (1,))])
def test_phi_determinant_matches_tableaux(lam, mu):
    lam, mu = Partition(lam), Partition(mu)
    assert phi_determinant(lam, mu) == phi(lam, mu)
    assert phi_signed(lam, mu) == phi(lam, mu).scale((-1) ** n_boxes_below(lam, mu))


def test_series_product_is_commutative_and_has_unit():
    D = 4
    h1 = dual_ehp("h", 1, 0, D)
    s = dual_schur((1, 1), D)
    assert series_mul(h1, s, D) == series_mul(s, h1, D)
    assert series_mul(SchurSeries.one(D), s, D) == s


def test_product_of_mixed_bases_is_rejected():
    D = 3
    with pytest.raises(WrongBasis):
        series_mul(dual_schur((1,), D), dual_schur((1,), D).to_dual(), D)


@pytest.mark.parametrize("mu", SMALL)
def test_omega_hat_is_an_involution(mu):
    s = dual_schur(mu, 4)
    assert omega_hat(omega_hat(s)) == s


def test_giambelli_and_jacobi_trudi():
    D = 5
    for lam in [(2, 1), (3, 1), (2, 2)]:
        theta = SkewShape(Partition(lam), Partition(()))
        assert dual_determinant(theta, D, "giambelli") == dual_schur(lam, D)
    theta = SkewShape(Partition((3, 1)), Partition((1,)))
    jt = dual_determinant(theta, D, "jacobi_trudi")
    assert jt == dual_determinant(theta, D, "nagelsbach_kostka")
    assert jt == skew_dual_schur(theta, D, D)


def test_skew_dual_lr_coefficient_example():
    # the coefficient of hat s_(1) in hat s_(2)/(1) is c^(2)_(1)(1) = 1
    theta = SkewShape(Partition((2,)), Partition((1,)))
    assert skew_dual_via_lr(theta, 2).coefficient((1,)) == ONE
    assert skew_dual_schur(theta, 2, 2).to_dual().coefficient((1,)) == ONE


@pytest.mark.xfail(strict=True, reason="tableau skew dual Schur differs from the LR combination beyond degree 1")
def test_skew_dual_equals_lr_combination():
    theta = SkewShape(Partition((2,)), Partition((1,)))
    assert skew_dual_schur(theta, 2, 2) == skew_dual_via_lr(theta, 2).to_schur()


def test_json_round_trip_and_text():
    s = dual_schur((2, 1), 4)
    assert SchurSeries.from_json(s.to_json()) == s
    assert str(s.to_dual()) == "S(2,1)"
    assert s.to_json()["basis"] == "schur"
    assert s.to_json()["degree"] == 4
