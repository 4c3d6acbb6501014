import pytest
from hypothesis import given, settings

from doublesym.algebra import Y, ZERO, ZERO_SPEC, a, parse_poly
from doublesym.double import (
    a_point,
    classical_schur,
    double_ehp,
    double_schur,
    double_schur_alternant,
    double_schur_tableau,
    evaluate_double_schur,
    format_xpoly,
    hook_value,
    jacobi_trudi,
    nagelsbach_kostka,
    parse_xpoly,
    skew_double_schur,
    supersymmetric_schur,
)
from doublesym.shapes import Partition, SkewShape, partitions_of
from strategies import partitions

METHODS = [double_schur, double_schur_tableau, double_schur_alternant, jacobi_trudi, nagelsbach_kostka]


@settings(max_examples=40, deadline=None)
@given(partitions(max_size=4, max_length=3))
def test_methods_agree(lam):
    for n in (len(lam), len(lam) + 1):
        if n == 0:
            continue
        ref = double_schur(lam, n)
        for fn in METHODS[1:]:
            assert fn(lam, n) == ref, fn.__name__


def test_first_examples():
    assert format_xpoly(double_schur((1,), 2).poly) == "x1 + x2 + [-a[1] - a[2]]"
    assert double_schur((1, 1, 1), 2).poly == ZERO
    assert double_schur_alternant((1, 1, 1), 2).poly == ZERO


@pytest.mark.parametrize("lam", [p for k in range(1, 5) for p in partitions_of(k)])
def test_classical_limit(lam):
    n = 3
    got = double_schur(lam, n).poly.specialize(ZERO_SPEC)
    assert got == classical_schur(lam, n).poly


@pytest.mark.parametrize("k", range(1, 4))
def test_e_and_h_are_single_row_and_column(k):
    n = 3
    assert double_ehp("h", k, n) == double_schur((k,), n)
    assert double_ehp("e", k, n) == double_schur((1,) * k, n)


def test_vanishing_and_hook_value():
    n = 3
    for rho in [p for k in range(4) for p in partitions_of(k)]:
        for lam in [p for k in range(4) for p in partitions_of(k)]:
            v = evaluate_double_schur(lam, a_point(rho, n))
            if not rho.contains(lam):
                assert v == ZERO
            elif lam == rho:
                assert v == hook_value(lam)
                assert v != ZERO


def test_skew_methods_agree():
    theta = SkewShape(Partition((2, 1)), Partition((1,)))
    ref = skew_double_schur(theta, 2, "supertableau_A")
    for method in ("supertableau_Aprime", "rho_sum"):
        assert skew_double_schur(theta, 2, method) == ref
    # s_{lam/empty} is s_lam
    assert skew_double_schur(SkewShape(Partition((2, 1)), Partition(())), 2) == double_schur((2, 1), 2)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)])
def test_supersymmetric_at_minus_a_is_double(lam):
    n = 2
    p = supersymmetric_schur(lam, n, n).poly
    got = p.substitute({(Y, i): -a(i) for i in range(1, n + 1)})
    assert got == double_schur(lam, n).poly


def test_xpoly_parse_round_trip():
    p = double_schur((2, 1), 2)
    assert parse_xpoly(format_xpoly(p.poly), 2) == p
    assert parse_xpoly("x1 + x2 - a[1] - a[2]", 2) == double_schur((1,), 2)
    assert parse_poly("x1") != parse_poly("x2")
