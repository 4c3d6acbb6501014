import pytest

from doublesym.algebra import Y, a, y
from doublesym.cauchy import IDENTITIES, KERNELS, cauchy_check, kernel, rhs, skew_cauchy_check


@pytest.mark.parametrize("n,D", [(1, 3), (2, 3)])
def test_all_identities_hold(n, D):
    report = cauchy_check(n, D)
    assert [r["identity"] for r in report] == list(IDENTITIES)
    bad = [r for r in report if not r["ok"]]
    assert not bad, bad


def test_perturbed_kernel_is_detected():
    n, D = 2, 3
    total = rhs("schur", n, D).truncate(Y, D)
    assert not kernel(n, D, "cauchy") - total
    assert kernel(n, D, "cauchy") + a(5) * y(1) ** 2 - total


def test_first_difference_is_reported():
    report = cauchy_check(1, 2, ["schur"])
    assert report[0]["first_difference"] is None


@pytest.mark.parametrize("mu", [(), (1,), (2,), (1, 1)])
def test_twisted_kernel(mu):
    assert skew_cauchy_check(mu, 2, 3)["ok"]


def test_every_identity_has_a_kernel():
    assert set(KERNELS) == set(IDENTITIES)
