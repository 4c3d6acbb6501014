"""The acceptance suites, runnable from the CLI and from the test-suite.

Each ``criterion_k`` returns a :class:`Result` holding named checks.  A check
is ``(name, ok, detail)``; the criterion passes when every check does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import (
    ZERO_SPEC,
    ONE,
    ZERO,
    Poly,
    a,
    format_poly,
    generic_spec,
    parse_poly,
    poly_sum,
)
from .basis import (
    DoubleSym,
    dual_lr,
    is_graham_positive,
    lr_polynomial,
    omega_a,
    rational_interpolation_eval,
)
from .cauchy import cauchy_check, skew_cauchy_check
from .double import (
    a_point,
    double_schur,
    double_schur_alternant,
    double_schur_tableau,
    evaluate_double_schur,
    hook_value,
    jacobi_trudi,
    nagelsbach_kostka,
    skew_double_schur,
    supersymmetric_schur,
    swap_xy,
)
from .flagged import complete, elementary, phi_signed, psi_signed
from .series import (
    dual_ehp,
    dual_schur,
    omega_hat,
    schur_to_dual,
    series_mul,
)
from .shapes import (
    EMPTY,
    Partition,
    SkewShape,
    dim_and_hook,
    hook_partition,
    lr_coefficient,
    mn_character,
    partitions_between,
    partitions_of,
    z_lambda,
)
from .transition import (
    char_dual,
    char_poly,
    character_hook_sum,
    double_forgotten,
    double_monomial,
    e_hat_product,
    h_hat_product,
    kostka,
    kostka_dual,
    kostka_number,
    pairing,
    shifted_value_check,
)


@dataclass
class Result:
    number: int
    title: str
    checks: list = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self):
        return [(n, d) for n, ok, d in self.checks if not ok]

    def summary(self):
        bad = self.failures
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {self.number}: {status} ({len(self.checks) - len(bad)}/{len(self.checks)} checks) {self.title}"
        for name, detail in bad:
            line += f"\n    failed: {name}" + (f" [{detail}]" if detail else "")
        return line


def P(text):
    return parse_poly(text)


def _eq(result, name, got, want):
    result.add(name, got == want, "" if got == want else f"got {format_poly(got)}, expected {format_poly(want)}")


def _parts(lo, hi):
    return [p for k in range(lo, hi + 1) for p in partitions_of(k)]


# -- 1. golden values -----------------------------------------------------------

def ex45_row(k, l, m):
    """sum_{r+s=m-k-l} (-1)^s h_r(a_0..a_{-k+1}) e_s(a_{-l}..a_{-m+2})."""
    top = m - k - l
    return poly_sum(
        complete(r, range(-k + 1, 1)).scale((-1) ** (top - r)) * elementary(top - r, range(-m + 2, -l + 1))
        for r in range(top + 1)
    )


def ex45_column(k, l, m):
    """sum_{r+s=m-k-l} (-1)^r h_r(a_1..a_k) e_s(a_{l+1}..a_{m-1})."""
    top = m - k - l
    return poly_sum(
        complete(r, range(1, k + 1)).scale((-1) ** r) * elementary(top - r, range(l + 1, m))
        for r in range(top + 1)
    )


def ex49_row(k, l, m):
    """The block-product sum over 0 <= i_1 < ... < i_{k-1} <= m-l-2."""
    total = []
    last = m - l - 2
    for cut in combinations(range(last + 1), k - 1):
        bounds = [-1] + list(cut) + [last + 1]
        term = ONE
        for b in range(k):
            for t in range(bounds[b] + 1, bounds[b + 1]):
                term = term * (a(-b) - a(-l - t))
        total.append(term)
    return poly_sum(total)


def criterion_1():
    r = Result(1, "golden values")
    for method in ("skew", "tableau", "classical"):
        _eq(r, f"dual LR (1),(2),(2,2) by {method}", dual_lr((1,), (2,), (2, 2), method), P("a[0] - a[1]"))
    _eq(r, "dual LR (2),(1),(2,2) by tableau, n=2", dual_lr((2,), (1,), (2, 2), "tableau", 2), P("a[0] - a[1]"))
    _eq(r, "LR (2),(1),(2)", lr_polynomial((2,), (1,), (2,)), P("a[-1] - a[1]"))
    _eq(r, "LR (3),(2,1),(3,2)", lr_polynomial((3,), (2, 1), (3, 2)), P("a[-2] - a[2]"))
    _eq(r, "LR (2),(1),(2,1)", lr_polynomial((2,), (1,), (2, 1)), ONE)
    # The displayed K-hat value omits the rho = (3) term of its own sum.
    _eq(r, "K-hat (3,2),(3,2,1) printed value", kostka_dual((3, 2), (3, 2, 1)), P("a[-2] + a[-1] - a[1] - a[2]"))

    sq = series_mul(dual_ehp("h", 1, 0, 4), dual_ehp("h", 1, 0, 4)).to_dual()
    golden = {
        (2,): "1", (1, 1): "1", (3,): "a[0] - a[-1]", (2, 1): "a[0] - a[1]", (1, 1, 1): "a[2] - a[1]",
        (4,): "(a[0] - a[-2])*(a[0] - a[-1])", (3, 1): "(a[0] - a[1])*(a[0] - a[-1])",
        (2, 2): "(a[0] - a[1])^2", (2, 1, 1): "(a[1] - a[0])*(a[1] - a[2])",
        (1, 1, 1, 1): "(a[1] - a[2])*(a[1] - a[3])",
    }
    for lam, text in golden.items():
        _eq(r, f"hat h_1^2 coefficient {lam}", sq.coefficient(lam), P(text))
        _eq(r, f"K {lam},(1,1)", kostka(lam, (1, 1)), P(text))

    monomials = {
        (1,): {(1,): "1"},
        (1, 1): {(1, 1): "1"},
        (2,): {(2,): "1", (1, 1): "-1"},
        (1, 1, 1): {(1, 1, 1): "1", (1, 1): "a[1] - a[2]"},
        (2, 1): {(2, 1): "1", (1, 1, 1): "-2", (1, 1): "2*a[2] - a[1] - a[0]"},
        (3,): {(3,): "1", (2, 1): "-1", (1, 1, 1): "1", (1, 1): "a[-1] - a[0]"},
    }
    for lam, coeffs in monomials.items():
        want = DoubleSym({k: P(v) for k, v in coeffs.items()})
        got = double_monomial(lam)
        r.add(f"m_{lam} printed expansion", got == want, "" if got == want else f"got {got}")

    s1 = dual_schur((1,), 5)
    for p in range(5):
        for q in range(5 - p):
            want = (a(0) ** p * a(1) ** q).scale((-1) ** q)
            _eq(r, f"hat s_(1) coefficient on s_({p}|{q})", s1.coefficient(hook_partition(p, q)), want)
    inv = schur_to_dual((1,), 5)
    for p in range(5):
        for q in range(5 - p):
            want = ONE
            for k in range(p):
                want = want * a(-k)
            for k in range(1, q + 1):
                want = want * a(k)
            _eq(r, f"s_(1) coefficient on hat s_({p}|{q})", inv.coefficient(hook_partition(p, q)), want.scale((-1) ** p))

    for m in range(2, 6):
        for l in range(1, m):
            want = ONE
            for t in range(l, m - 1):
                want = want * (a(0) - a(-t))
            _eq(r, f"dual LR (1),({l}),({m}) product", dual_lr((1,), (l,), (m,), "classical"), want)
            want = ONE
            for t in range(l + 1, m):
                want = want * (a(t) - a(1))
            _eq(r, f"dual LR (1),(1^{l}),(1^{m}) product",
                dual_lr((1,), (1,) * l, (1,) * m, "classical"), want)
    for m in range(2, 6):
        for k in range(1, m):
            for l in range(k, m - k + 1):
                lib = dual_lr((k,), (l,), (m,), "skew")
                _eq(r, f"row sum formula ({k}),({l}),({m})", ex45_row(k, l, m), lib)
                _eq(r, f"block sum formula ({k}),({l}),({m})", ex49_row(k, l, m), lib)
                _eq(r, f"column sum formula (1^{k}),(1^{l}),(1^{m})", ex45_column(k, l, m),
                    dual_lr((1,) * k, (1,) * l, (1,) * m, "skew"))
    return r


# -- 2. one character three ways ---------------------------------------------

HOOK_VALUES = {(1,): Fraction(24, 5), (2,): 2, (1, 1): 3, (3,): 2, (2, 1): 1, (2, 2): 1, (3, 2): 1}
HOOK_TERMS = [Fraction(-5, 24), Fraction(32, 6), Fraction(81, 12), Fraction(-81, 3),
              Fraction(256, 12), Fraction(-125, 24)]


def criterion_2():
    r = Result(2, "chi^(3,2)_(2,1,1,1) = 1 three ways")
    lam, mu = Partition((3, 2)), Partition((2, 1, 1, 1))
    _eq(r, "coefficient of s_lam in p_mu", char_poly(lam, mu), ONE)
    _eq(r, "dual character via psi and Murnaghan-Nakayama", char_dual(lam, mu), ONE)
    r.add("Murnaghan-Nakayama oracle", mn_character(lam, mu) == 1)
    for rho, h in HOOK_VALUES.items():
        got = dim_and_hook(SkewShape(lam, rho))[1]
        r.add(f"H_(3,2)/{rho} = {h}", got == h, f"got {got}")
    total, terms = character_hook_sum(lam, mu, terms=True)
    r.add("hook sum terms", sorted(t for _, t in terms) == sorted(HOOK_TERMS), str([str(t) for _, t in terms]))
    r.add("hook sum value", total == 1, str(total))
    return r


# -- 3. cross-method equality ------------------------------------------------------

def criterion_3(max_n=4):
    r = Result(3, "cross-method equality")
    for n in range(1, max_n + 1):
        for lam in _parts(0, 5):
            ref = double_schur(lam, n).poly
            ok = (double_schur_tableau(lam, n).poly == ref
                  and double_schur_alternant(lam, n).poly == ref
                  and jacobi_trudi(lam, n).poly == ref
                  and nagelsbach_kostka(lam, n).poly == ref)
            r.add(f"double Schur {lam} n={n}", ok)
    for mu in _parts(0, 3):
        for D in range(mu.size, 7):
            ref = dual_schur(mu, D)
            r.add(f"dual Schur {mu} D={D} determinant", dual_schur(mu, D, "determinant") == ref)
            n = 3
            trunc = ref.restrict_length(n)
            r.add(f"dual Schur {mu} D={D} combinatorial n={n}",
                  dual_schur(mu, D, "combinatorial", n) == trunc)
            r.add(f"dual Schur {mu} D={D} alternant n={n}", dual_schur(mu, D, "alternant", n) == trunc)
    for nu in _parts(1, 4):
        for mu in partitions_between(EMPTY, nu):
            theta = SkewShape(nu, mu)
            for n in (2, 3):
                A1 = skew_double_schur(theta, n, "supertableau_A").poly
                A2 = skew_double_schur(theta, n, "supertableau_Aprime").poly
                A3 = skew_double_schur(theta, n, "rho_sum").poly
                r.add(f"skew double Schur {nu}/{mu} n={n}", A1 == A2 == A3)
    return r


# -- 4. Cauchy harness ---------------------------------------------------------------

def criterion_4(big=True):
    r = Result(4, "Cauchy identities")
    runs = [(2, D) for D in range(1, 5)]
    if big:
        runs += [(3, D) for D in range(1, 6)]
    for n, D in runs:
        for rep in cauchy_check(n, D):
            r.add(f"{rep['identity']} n={n} D={D}", rep["ok"], rep["first_difference"] or "")
    for mu in _parts(1, 3):
        rep = skew_cauchy_check(mu, 2, 3)
        r.add(f"twisted kernel mu={mu} n=2 D=3", rep["ok"], rep["first_difference"] or "")
    return r


# -- 5. vanishing and hook values -----------------------------------------------

def criterion_5():
    r = Result(5, "vanishing theorem and hook-product values")
    shapes = _parts(0, 5)
    for rho in shapes:
        for n in (len(rho), len(rho) + 1):
            if n == 0:
                continue
            pt = a_point(rho, n)
            for lam in shapes:
                v = evaluate_double_schur(lam, pt)
                if not rho.contains(lam):
                    r.add(f"s_{lam}(a_{rho}) = 0, n={n}", not v)
                elif lam == rho:
                    _eq(r, f"s_{lam}(a_{lam}) hook product, n={n}", v, hook_value(lam))
                else:
                    r.add(f"s_{lam}(a_{rho}) nonzero, n={n}", bool(v))
    for nu in shapes:
        for mu in partitions_between(EMPTY, nu):
            ok, got, want = shifted_value_check(mu, nu)
            r.add(f"shifted value s_{mu}(a_{nu}) = H_nu/H_nu/mu", ok, f"{got} vs {want}")
    return r


# -- 6. classical limits ---------------------------------------------------------

def criterion_6():
    r = Result(6, "classical limits at a = 0")
    shapes = _parts(0, 5)
    for nu in shapes:
        for lam in partitions_between(EMPTY, nu):
            for mu in partitions_between(EMPTY, nu):
                if lam.size + mu.size < nu.size:
                    continue
                got = lr_polynomial(lam, mu, nu).evaluate(ZERO_SPEC)
                r.add(f"LR {lam},{mu},{nu}", got == lr_coefficient(lam, mu, nu), str(got))
    for lam in _parts(1, 5):
        for mu in _parts(1, 5):
            if lam.size == mu.size:
                k = kostka_number(lam, mu)
                r.add(f"K-hat {lam},{mu}", kostka_dual(lam, mu).evaluate(ZERO_SPEC) == k)
                r.add(f"K {lam},{mu}", kostka(lam, mu).evaluate(ZERO_SPEC) == k)
                chi = mn_character(lam, mu)
                r.add(f"chi {lam},{mu}", char_poly(lam, mu).evaluate(ZERO_SPEC) == chi)
                r.add(f"chi-hat {lam},{mu}", char_dual(lam, mu).evaluate(ZERO_SPEC) == chi)
            elif lam.size < mu.size and mu.size <= 4:
                r.add(f"K-hat {lam},{mu} vanishes", kostka_dual(lam, mu).evaluate(ZERO_SPEC) == 0)
                r.add(f"chi {lam},{mu} vanishes", char_poly(lam, mu).evaluate(ZERO_SPEC) == 0)
    return r


# -- 7. symmetries ----------------------------------------------------------------

def criterion_7():
    r = Result(7, "conjugation symmetries")
    for nu in _parts(0, 4):
        for lam in partitions_between(EMPTY, nu):
            for mu in partitions_between(EMPTY, nu):
                c = lr_polynomial(lam, mu, nu)
                cc = lr_polynomial(lam.conjugate(), mu.conjugate(), nu.conjugate())
                r.add(f"LR {lam},{mu},{nu}", c == cc.dualize())
                d = dual_lr(lam, mu, nu)
                dc = dual_lr(lam.conjugate(), mu.conjugate(), nu.conjugate())
                r.add(f"dual LR {lam},{mu},{nu}", d == dc.dualize())
    for nu in _parts(1, 4):
        for mu in partitions_between(EMPTY, nu):
            theta = SkewShape(nu, mu)
            for nx, ny in ((1, 1), (2, 2)):
                left = supersymmetric_schur(theta, nx, ny).poly
                right = swap_xy(supersymmetric_schur(theta.conjugate(), ny, nx).poly).dualize()
                r.add(f"super swap {nu}/{mu} ({nx},{ny})", left == right)
    return r


# -- 8. duality -----------------------------------------------------------------------

def criterion_8():
    r = Result(8, "duality and involutions")
    shapes = _parts(0, 6)
    for lam in shapes:
        for mu in shapes:
            if mu.size > lam.size:
                continue
            s1 = poly_sum(phi_signed(lam, nu) * psi_signed(nu, mu) for nu in partitions_between(mu, lam))
            s2 = poly_sum(psi_signed(lam, nu) * phi_signed(nu, mu) for nu in partitions_between(mu, lam))
            want = ONE if lam == mu else ZERO
            r.add(f"phi*psi {lam},{mu}", s1 == want)
            r.add(f"psi*phi {lam},{mu}", s2 == want)
    small = _parts(0, 4)
    for lam in small:
        for mu in small:
            d = ONE if lam == mu else ZERO
            got = pairing(DoubleSym.basis(lam), dual_schur(mu, 4))
            r.add(f"<s_{lam}, hat s_{mu}>", got == d)
            if lam and mu:
                pp = poly_sum(char_poly(nu, lam) * char_dual(nu, mu) for nu in _parts(0, 4))
                want = Poly.const(z_lambda(lam)) if lam == mu else ZERO
                r.add(f"<p_{lam}, p_{mu}>", pp == want, format_poly(pp))
            got = pairing(double_monomial(lam), h_hat_product(mu, 4))
            r.add(f"<m_{lam}, hat h_{mu}>", got == d, format_poly(got))
            got = pairing(double_forgotten(lam), e_hat_product(mu, 4))
            r.add(f"<f_{lam}, hat e_{mu}>", got == d, format_poly(got))
    for lam in small:
        u = DoubleSym({lam: ONE, EMPTY: a(1) - a(-1)}) if lam else DoubleSym.basis(lam)
        r.add(f"omega_a twice on {lam}", omega_a(omega_a(u)) == u)
        s = dual_schur(lam, 4)
        r.add(f"omega-hat twice on hat s_{lam}", omega_hat(omega_hat(s)) == s)
        r.add(f"omega-hat hat s_{lam} = hat s_{lam.conjugate()}(a')",
              omega_hat(s) == dual_schur(lam.conjugate(), 4).dualize())
        for mu in small:
            # <omega_a s_lam, omega-hat hat s_mu>' computed in the primed world
            left = omega_a(DoubleSym.basis(lam))
            right = omega_hat(dual_schur(mu, 4)).dualize()
            got = pairing(left, right).dualize()
            r.add(f"pairing compatibility {lam},{mu}", got == (ONE if lam == mu else ZERO))
    for k in range(1, 5):
        r.add(f"omega-hat hat h_{k} = hat e_{k}(a')",
              omega_hat(dual_ehp("h", k, 0, 4)) == dual_ehp("e", k, 0, 4).dualize())
        r.add(f"omega_a e_{k} = h_{k}(a')",
              omega_a(DoubleSym.basis((1,) * k)) == DoubleSym.basis((k,)))
    return r


# -- 9. rational interpolation ------------------------------------------------------

def criterion_9(seeds=20):
    r = Result(9, "rational interpolation chain sums")
    shapes = _parts(1, 4)
    specs = [generic_spec(s) for s in range(1, seeds + 1)]
    for spec in specs:
        bad = []
        for lam in shapes:
            for mu in shapes:
                if lam.size <= mu.size:
                    if rational_interpolation_eval("kostka_dual", (lam, mu), spec) != kostka_dual(lam, mu).evaluate(spec):
                        bad.append(("kostka_dual", lam, mu))
                    if rational_interpolation_eval("character", (lam, mu), spec) != char_poly(lam, mu).evaluate(spec):
                        bad.append(("character", lam, mu))
        for nu in shapes:
            for lam in partitions_between(EMPTY, nu):
                for mu in partitions_between(EMPTY, nu):
                    if lam.size + mu.size >= nu.size:
                        if rational_interpolation_eval("lr", (lam, mu, nu), spec) != lr_polynomial(lam, mu, nu).evaluate(spec):
                            bad.append(("lr", lam, mu, nu))
                    if lam.size + mu.size <= nu.size:
                        if rational_interpolation_eval("dual_lr", (lam, mu, nu), spec) != dual_lr(lam, mu, nu).evaluate(spec):
                            bad.append(("dual_lr", lam, mu, nu))
        r.add(f"chain sums under generic:{spec.seed}", not bad, str(bad[:3]))
    for n in range(1, 6):
        for lam in partitions_of(n):
            dim = dim_and_hook(lam)[0]
            _eq(r, f"chi^{lam}_(1^{n}) = dim", char_poly(lam, (1,) * n), Poly.const(dim))
    return r


# -- 10. Graham positivity -------------------------------------------------------------

def criterion_10():
    r = Result(10, "Graham positivity of LR polynomials")
    for nu in _parts(0, 4):
        for lam in partitions_between(EMPTY, nu):
            for mu in partitions_between(EMPTY, nu):
                c = lr_polynomial(lam, mu, nu)
                if c:
                    r.add(f"LR {lam},{mu},{nu}", is_graham_positive(c), format_poly(c))
    return r


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run(numbers=None):
    numbers = sorted(CRITERIA) if numbers is None else numbers
    return [CRITERIA[k]() for k in numbers]
