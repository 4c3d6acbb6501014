"""Acceptance criteria, one test (and one printed pass/fail line) per criterion.

Run directly with ``python3 tests/test_acceptance.py`` for the summary lines only.
"""

from functools import lru_cache

import pytest

from doublesym.algebra import parse_poly, poly_sum
from doublesym.basis import DoubleSym, lr_polynomial
from doublesym.series import dual_ehp, series_mul
from doublesym.shapes import partitions_between
from doublesym.transition import double_monomial, kostka_dual, pairing
from doublesym.verify import CRITERIA

# Two printed values in criterion 1 disagree with every independent route to
# the same quantity; see the K-hat and m_(3) tests below for the oracles.
PRINTED_GOLDENS = {
    "K-hat (3,2),(3,2,1) printed value",
    "m_(3,) printed expansion",
}


@lru_cache(maxsize=None)
def result(k):
    return CRITERIA[k]()


def _report(capsys, res):
    with capsys.disabled():
        print("\n" + res.summary())


@pytest.mark.parametrize("k", [k for k in sorted(CRITERIA) if k != 1])
def test_criterion(k, capsys):
    res = result(k)
    _report(capsys, res)
    assert res.ok, res.summary()


@pytest.mark.xfail(strict=True, reason="two printed goldens contradict independent oracles")
def test_criterion_1(capsys):
    res = result(1)
    _report(capsys, res)
    assert res.ok, res.summary()


def test_criterion_1_other_goldens():
    res = result(1)
    failed = {name for name, _ in res.failures}
    assert failed <= PRINTED_GOLDENS, failed
    assert len(res.checks) - len(failed) >= 100


# -- the two disputed values ----------------------------------------------------

@pytest.mark.xfail(strict=True, reason="printed sum omits its rho = (3) term")
def test_kostka_dual_printed_value():
    assert kostka_dual((3, 2), (3, 2, 1)) == parse_poly("a[-2] + a[-1] - a[1] - a[2]")


def test_kostka_dual_corrected_value():
    want = parse_poly("2*a[-2] - a[1] - a[2]")
    assert kostka_dual((3, 2), (3, 2, 1)) == want
    assert kostka_dual((3, 2), (3, 2, 1), method="lr") == want
    # h_3 h_2 h_1 expanded one product at a time, every intermediate rho kept
    by_rho = poly_sum(
        lr_polynomial((3,), (2,), rho) * lr_polynomial(rho, (1,), (3, 2))
        for rho in partitions_between((3,), (3, 2))
    )
    assert by_rho == want


@pytest.mark.xfail(strict=True, reason="printed s_(1,1) coefficient is not dual to hat h_1^2")
def test_monomial_3_printed():
    want = DoubleSym({
        (3,): parse_poly("1"), (2, 1): parse_poly("-1"), (1, 1, 1): parse_poly("1"),
        (1, 1): parse_poly("a[-1] - a[0]"),
    })
    assert double_monomial((3,)) == want


def test_monomial_3_pairs_to_zero_with_h1_squared():
    sq = series_mul(dual_ehp("h", 1, 0, 4), dual_ehp("h", 1, 0, 4))
    m3 = double_monomial((3,))
    assert m3.coefficient((1, 1)) == parse_poly("a[-1] - a[2]")
    assert not pairing(m3, sq)


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        print(CRITERIA[k]().summary(), flush=True)
