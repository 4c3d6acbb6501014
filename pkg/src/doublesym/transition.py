"""Kostka-type and character polynomials, double monomial and forgotten
functions, supersymmetric expansions and the hook-product identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import FROBENIUS, ONE, SHIFTED, ZERO, Poly, a, format_poly, poly_sum
from .basis import DoubleSym, ambient_n, interpolate, lr_expansion, lr_polynomial, omega_a
from .double import a_point, evaluate_double_schur
from .errors import TruncationTooSmall
from .flagged import phi_signed, psi_signed
from .series import SchurSeries, dual_ehp, series_mul
from .shapes import (
    EMPTY,
    Partition,
    SkewShape,
    hook_product,
    lr_coefficient,
    mn_character,
    partitions_between,
    partitions_containing,
    partitions_of,
)


def _graded(max_size, min_size=0):
    return [p for k in range(min_size, max_size + 1) for p in partitions_of(k)]


# -- Kostka-type polynomials --------------------------------------------------

def _h_product_value(mu, n):
    def value(rho):
        pt = a_point(rho, n)
        out = ONE
        for k in mu:
            out = out * evaluate_double_schur(Partition((k,)), pt)
        return out
    return value


@lru_cache(maxsize=None)
def kostka_dual(lam, mu, method="interpolation"):
    """Coefficient of s_lam(x||a) in h_mu(x||a) = h_mu1(x||a) h_mu2(x||a) ...

    ``interpolation`` runs the box recurrence on the values h_mu(a_rho);
    ``lr`` multiplies out the product with LR polynomials.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size > mu.size:
        return ZERO
    if method == "interpolation":
        n = ambient_n(lam, mu)
        return interpolate(_h_product_value(mu, n), EMPTY, [lam])[lam]
    if method == "lr":
        return h_product(mu).coefficient(lam)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def h_product(mu):
    """h_mu(x||a) expanded in the double Schur basis through LR polynomials."""
    mu = Partition(mu)
    cur = {EMPTY: ONE}
    for k in mu:
        nxt = {}
        for rho, c in cur.items():
            for nu, w in lr_expansion(rho, Partition((k,))).items():
                nxt[nu] = nxt.get(nu, ZERO) + c * w
        cur = {k2: v for k2, v in nxt.items() if v}
    return DoubleSym(cur)


@lru_cache(maxsize=None)
def h_hat_product(mu, D):
    """hat h_mu1 ... hat h_mul as a classical-basis series."""
    out = SchurSeries.one(D)
    for k in Partition(mu):
        out = series_mul(out, dual_ehp("h", k, 0, D), D)
    return out


def kostka(lam, mu, D=None):
    """Coefficient of hat s_lam in hat h_mu (series product, then change of basis)."""
    lam, mu = Partition(lam), Partition(mu)
    if D is None:
        D = lam.size
    if D < lam.size:
        raise TruncationTooSmall(f"degree {D} is below |{lam}| = {lam.size}")
    if mu.size > lam.size:
        return ZERO
    return h_hat_product(mu, D).to_dual().coefficient(lam)


# -- character polynomials ----------------------------------------------------

def power_sum_value(mu, point):
    """p_mu(x||a) at x = point (any length n, with p_k = sum_i x_i^k - a_i^k)."""
    out = ONE
    for k in Partition(mu):
        out = out * poly_sum((v ** k) - a(i) ** k for i, v in enumerate(point, start=1))
    return out


@lru_cache(maxsize=None)
def char_poly(lam, mu):
    """chi^lam_mu(a): coefficient of s_lam(x||a) in p_mu(x||a)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size > mu.size:
        return ZERO
    n = ambient_n(lam, mu)
    return interpolate(lambda rho: power_sum_value(mu, a_point(rho, n)), EMPTY, [lam])[lam]


@lru_cache(maxsize=None)
def char_dual(lam, mu):
    """hat chi^lam_mu(a) = sum_rho (-1)^{m(lam/rho)} chi^rho_mu psi_{lam/rho}(a), |rho| = |mu|."""
    lam, mu = Partition(lam), Partition(mu)
    terms = []
    for rho in partitions_of(mu.size):
        if lam.contains(rho):
            chi = mn_character(rho, mu)
            if chi:
                terms.append(psi_signed(lam, rho).scale(chi))
    return poly_sum(terms)


def power_sum_series(mu, D):
    """p_mu(x) as a classical-basis series (Murnaghan-Nakayama)."""
    mu = Partition(mu)
    return SchurSeries({rho: Poly.const(mn_character(rho, mu)) for rho in partitions_of(mu.size)}, D)


# -- double monomial and forgotten functions -----------------------------------

@lru_cache(maxsize=None)
def double_monomial(lam):
    """m_lam(x||a), solved from s_nu = sum_mu K_{nu mu}(a) m_mu."""
    lam = Partition(lam)
    out = DoubleSym.basis(lam)
    for k in range(lam.size + 1):
        for mu in partitions_of(k):
            if mu == lam:
                continue
            c = kostka(lam, mu)
            if c:
                out = out - double_monomial(mu).scale(c)
    return out


def double_forgotten(lam):
    """f_lam(x||a), the image of m_lam(x||a') under omega, so that <f_lam, hat e_mu> = delta."""
    return omega_a(double_monomial(Partition(lam)))


@lru_cache(maxsize=None)
def e_hat_product(mu, D):
    out = SchurSeries.one(D)
    for k in Partition(mu):
        out = series_mul(out, dual_ehp("e", k, 0, D), D)
    return out


def pairing(u, v):
    """<u, v> for u in the double Schur basis and v a series (converted to the dual basis)."""
    v = v.to_dual()
    return poly_sum(c * v.coefficient(lam) for lam, c in u.coeffs.items())


# -- supersymmetric expansions ------------------------------------------------

def super_expansions(lam, D=None, spec=None):
    """Transition coefficients between s(x/y||a) and s(x/y).

    Returns ``(down, up)``: ``down`` maps mu to (-1)^{m(lam/mu)} psi_{lam/mu}
    (the expansion of s_lam(x/y||a)) and ``up`` maps nu to
    (-1)^{n(nu/lam)} phi_{nu/lam} (the expansion of s_lam(x/y)), for
    |nu| <= D.  With a spec (e.g. the Frobenius one) values are numeric.
    """
    lam = Partition(lam)
    if D is None:
        D = lam.size + 2
    down = {}
    for k in range(lam.size + 1):
        for mu in partitions_of(k):
            c = psi_signed(lam, mu)
            if c:
                down[mu] = c
    up = {}
    for nu in partitions_containing(lam, D):
        c = phi_signed(nu, lam)
        if c:
            up[nu] = c
    if spec is not None:
        down = {k: v.evaluate(spec) for k, v in down.items()}
        up = {k: v.evaluate(spec) for k, v in up.items()}
    return down, up


def frobenius_schur_coefficients(lam, D=None):
    return super_expansions(lam, D, FROBENIUS)


# -- hook-product identities ---------------------------------------------------

def _H(theta):
    return Fraction(hook_product(theta))


def pi_value(mu, rho):
    rho = Partition(rho)
    out = Fraction(1)
    for k in Partition(mu):
        out *= sum(((i - rho.part(i)) ** k - i ** k for i in range(1, len(rho) + 1)), 0)
    return out


def kappa_value(mu, rho):
    rho = Partition(rho)
    ell = len(rho)

    def chain_sum(k):
        # sum over ell >= i1 >= i2 >= ... >= ik >= 1 of rho_i1 (rho_i2 - 1) ... (rho_ik - k + 1)
        @lru_cache(maxsize=None)
        def rec(t, top):
            if t == k:
                return 1
            return sum((rho.part(i) - t) * rec(t + 1, i) for i in range(1, top + 1))
        return rec(0, ell)

    out = Fraction(1)
    for k in Partition(mu):
        out *= chain_sum(k)
    return out


def character_hook_sum(lam, mu, terms=False):
    """chi^lam_mu as sum_rho (-1)^{|rho|} pi_mu(rho) / (H_rho H_{lam/rho})."""
    lam = Partition(lam)
    parts = []
    for rho in partitions_between(EMPTY, lam):
        v = pi_value(mu, rho)
        if v:
            parts.append((rho, (-1) ** rho.size * v / (_H(rho) * _H(SkewShape(lam, rho)))))
    total = sum((v for _, v in parts), Fraction(0))
    return (total, parts) if terms else total


def kostka_hook_sum(lam, mu):
    """K_{lam mu} as sum_rho (-1)^{|lam/rho|} kappa_mu(rho) / (H_rho H_{lam/rho})."""
    lam = Partition(lam)
    total = Fraction(0)
    for rho in partitions_between(EMPTY, lam):
        v = kappa_value(mu, rho)
        if v:
            total += (-1) ** (lam.size - rho.size) * v / (_H(rho) * _H(SkewShape(lam, rho)))
    return total


def lr_hook_sum(lam, mu, nu):
    """c^nu_{lam mu} as sum over lam, mu in rho in nu of (-1)^{|nu/rho|} H_rho / (H_{nu/rho} H_{rho/lam} H_{rho/mu})."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    total = Fraction(0)
    for rho in partitions_between(lam, nu):
        if rho.contains(mu):
            total += (-1) ** (nu.size - rho.size) * _H(rho) / (
                _H(SkewShape(nu, rho)) * _H(SkewShape(rho, lam)) * _H(SkewShape(rho, mu))
            )
    return total


def kostka_number(lam, mu):
    """Semistandard tableaux of shape lam and content mu."""
    from .tableaux import semistandard_tableaux

    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return 0
    count = 0
    for T in semistandard_tableaux(lam, len(mu)):
        content = [0] * len(mu)
        for v in T.values():
            content[v - 1] += 1
        if tuple(content) == tuple(mu):
            count += 1
    return count


def hook_identities(lam, mu, nu=None):
    """Report comparing the hook-product sums with the classical oracles."""
    lam, mu = Partition(lam), Partition(mu)
    report = []
    if lam.size == mu.size:
        value, terms = character_hook_sum(lam, mu, terms=True)
        report.append({
            "identity": "character",
            "value": value,
            "oracle": mn_character(lam, mu),
            "terms": [(rho, t) for rho, t in terms],
        })
        report.append({
            "identity": "kostka",
            "value": kostka_hook_sum(lam, mu),
            "oracle": kostka_number(lam, mu),
        })
    if nu is not None:
        nu = Partition(nu)
        if nu.size == lam.size + mu.size:
            oracle = lr_coefficient(lam, mu, nu)
        else:
            # below top degree the sum is the shifted value of c^nu_{lam mu}(a)
            oracle = lr_polynomial(lam, mu, nu).evaluate(SHIFTED)
        report.append({
            "identity": "littlewood_richardson",
            "value": lr_hook_sum(lam, mu, nu),
            "oracle": oracle,
        })
    for r in report:
        r["ok"] = r["value"] == r["oracle"]
    return report


def shifted_value_check(mu, nu):
    """s_mu(a_nu||a) at a_i = -i+1 against H_nu / H_{nu/mu}."""
    mu, nu = Partition(mu), Partition(nu)
    n = max(len(nu), 1)
    got = evaluate_double_schur(mu, a_point(nu, n)).evaluate(SHIFTED)
    want = _H(nu) / _H(SkewShape(nu, mu)) if nu.contains(mu) else 0
    return got == want, got, want


# -- transition matrices ---------------------------------------------------------

@dataclass(frozen=True)
class TransitionMatrix:
    rows: tuple
    cols: tuple
    entries: dict

    @classmethod
    def build(cls, fn, max_size, min_size=0, cols_max=None):
        rows = tuple(_graded(max_size, min_size))
        cols = tuple(_graded(max_size if cols_max is None else cols_max, min_size))
        entries = {}
        for r in rows:
            for c in cols:
                v = fn(r, c)
                if v:
                    entries[(r, c)] = v
        return cls(rows, cols, entries)

    def __getitem__(self, key):
        r, c = key
        return self.entries.get((Partition(r), Partition(c)), ZERO)

    def to_text(self):
        label = lambda p: "(" + ",".join(map(str, p)) + ")"
        cells = [[""] + [label(c) for c in self.cols]]
        for r in self.rows:
            cells.append([label(r)] + [format_poly(self[r, c]) for c in self.cols])
        widths = [max(len(row[k]) for row in cells) for k in range(len(cells[0]))]
        return "\n".join(
            "  ".join(s.rjust(w) for s, w in zip(row, widths)).rstrip() for row in cells
        )

    def to_json(self):
        return {
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [[self[r, c].to_json() for c in self.cols] for r in self.rows],
        }


def matrix(kind, max_size):
    fns = {
        "kostka_dual": kostka_dual,
        "kostka": lambda l, m: kostka(l, m, max(l.size, 0)),
        "char": char_poly,
        "char_dual": char_dual,
    }
    fn = fns.get(kind)
    if fn is None:
        raise ValueError(f"unknown matrix {kind!r}")
    return TransitionMatrix.build(fn, max_size)

