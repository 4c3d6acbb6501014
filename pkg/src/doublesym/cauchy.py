"""Coefficient-exact checks of the Cauchy-type product expansions in n variables.

Every kernel is a product over i, j <= n, expanded as a polynomial truncated
at degree D in the series alphabet.  Each identity compares that expansion
with the corresponding sum over partitions of size <= D.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .algebra import ONE, X, Y, Z, Poly, a, decode, format_poly, poly_sum
from .double import double_ehp, double_schur, supersymmetric_schur
from .series import _geometric, dual_schur, dual_schur_polynomial
from .shapes import Partition, SkewShape, partitions_of, z_lambda
from .transition import double_monomial, e_hat_product

IDENTITIES = (
    "schur",
    "h_mhat",
    "power_sums",
    "super_schur",
    "super_conjugate",
    "conjugate",
    "e_mhat",
    "power_sums_signed",
    "m_ehat",
)


def _v(kind, i):
    return Poly.var(kind, i)


def kernel(n, D, kind):
    """The truncated product for the given kernel kind.

    ``cauchy``: prod (1 - a_i y_j)/(1 - x_i y_j) in y;
    ``super``: prod (1 + y_i z_j)/(1 - x_i z_j) in z;
    ``super_conjugate``: prod (1 + x_i z_j)/(1 - y_i z_j) in z;
    ``dual``: prod (1 + x_i y_j)/(1 + a_i y_j) in y.
    """
    if kind == "cauchy":
        var, num, den = Y, lambda i: -a(i), lambda i: _v(X, i)
    elif kind == "super":
        var, num, den = Z, lambda i: _v(Y, i), lambda i: _v(X, i)
    elif kind == "super_conjugate":
        var, num, den = Z, lambda i: _v(X, i), lambda i: _v(Y, i)
    elif kind == "dual":
        var, num, den = Y, lambda i: _v(X, i), lambda i: -a(i)
    else:
        raise ValueError(f"unknown kernel {kind!r}")
    out = ONE
    for j in range(1, n + 1):
        t = _v(var, j)
        for i in range(1, n + 1):
            out = out.mul_trunc(ONE + num(i) * t, var, D)
            out = out.mul_trunc(_geometric(den(i), t, D), var, D)
    return out


def dual_power(yv, r, D, primed=False):
    """(y,a)^r = y^r / prod_{k=1-r}^{0} (1 - a_k y); with ``primed`` the a' version
    y^r / prod_{m=1}^{r} (1 + a_m y)."""
    out = yv ** r
    for k in range(1, r + 1):
        g = -a(k) if primed else a(1 - k)
        out = out.mul_trunc(_geometric(g, yv, D), Y, D)
    return out


def dual_monomial(lam, n, D, primed=False):
    """m-hat_lam(y||a) in y_1..y_n, truncated at y-degree D."""
    lam = Partition(lam)
    if len(lam) > n:
        return Poly()
    vec = list(lam) + [0] * (n - len(lam))
    terms = []
    for perm in sorted(set(permutations(vec))):
        term = ONE
        for j, r in enumerate(perm, start=1):
            if r:
                term = term.mul_trunc(dual_power(_v(Y, j), r, D, primed), Y, D)
        terms.append(term)
    return poly_sum(terms).truncate(Y, D)


def _product(factors):
    out = ONE
    for f in factors:
        out = out * f
    return out


def _parts(D, n=None):
    return [lam for k in range(D + 1) for lam in partitions_of(k) if n is None or len(lam) <= n]


def rhs(identity, n, D):
    """Right-hand side of one identity as a polynomial."""
    if identity == "schur":
        return poly_sum(
            double_schur(lam, n).poly * dual_schur(lam, D).to_polynomial(n, Y) for lam in _parts(D, n)
        )
    if identity == "h_mhat":
        return poly_sum(
            _product(double_ehp("h", k, n).poly for k in lam) * dual_monomial(lam, n, D)
            for lam in _parts(D, n)
        )
    if identity in ("power_sums", "power_sums_signed"):
        out = []
        for lam in _parts(D):
            c = Fraction(1, z_lambda(lam))
            if identity == "power_sums_signed":
                c *= (-1) ** (lam.size - len(lam))
            px = _product(double_ehp("p", k, n).poly for k in lam)
            py = _product(poly_sum(_v(Y, j) ** k for j in range(1, n + 1)) for k in lam)
            out.append((px * py).scale(c))
        return poly_sum(out)
    if identity == "super_schur":
        return poly_sum(
            supersymmetric_schur(lam, n, n, "A").poly * dual_schur(lam, D).to_polynomial(n, Z)
            for lam in _parts(D)
        )
    if identity == "super_conjugate":
        return poly_sum(
            supersymmetric_schur(lam, n, n, "A").poly
            * dual_schur(lam.conjugate(), D).dualize().to_polynomial(n, Z)
            for lam in _parts(D)
        )
    if identity == "conjugate":
        return poly_sum(
            double_schur(lam, n).poly * dual_schur(lam.conjugate(), D).dualize().to_polynomial(n, Y)
            for lam in _parts(D, n)
        )
    if identity == "e_mhat":
        return poly_sum(
            _product(double_ehp("e", k, n).poly for k in lam) * dual_monomial(lam, n, D, primed=True)
            for lam in _parts(D, n)
        )
    if identity == "m_ehat":
        return poly_sum(
            double_monomial(lam).to_xpoly(n).poly * e_hat_product(lam, D).dualize().to_polynomial(n, Y)
            for lam in _parts(D)
        )
    raise ValueError(f"unknown identity {identity!r}")


KERNELS = {
    "schur": "cauchy",
    "h_mhat": "cauchy",
    "power_sums": "cauchy",
    "super_schur": "super",
    "super_conjugate": "super_conjugate",
    "conjugate": "dual",
    "e_mhat": "dual",
    "power_sums_signed": "dual",
    "m_ehat": "dual",
}


def _first_difference(diff):
    if not diff:
        return None
    m, c = min(diff.terms.items(), key=lambda mc: (sum(e for _, _, e in decode(mc[0])), decode(mc[0])))
    return format_poly(Poly({m: c}))


def cauchy_check(n, D, identities=IDENTITIES):
    """Per-identity report ``{"identity", "ok", "first_difference"}``."""
    kernels = {}
    report = []
    for name in identities:
        kind = KERNELS[name]
        if kind not in kernels:
            kernels[kind] = kernel(n, D, kind)
        var = Z if kind in ("super", "super_conjugate") else Y
        diff = kernels[kind] - rhs(name, n, D).truncate(var, D)
        report.append({"identity": name, "n": n, "degree": D, "ok": not diff,
                       "first_difference": _first_difference(diff)})
    return report


def twisted_kernel(mu, n, D):
    """prod_{i,j<=n} (1 - a_{i-mu_i} y_j)/(1 - x_i y_j) truncated at y-degree D."""
    mu = Partition(mu)
    out = ONE
    for j in range(1, n + 1):
        t = _v(Y, j)
        for i in range(1, n + 1):
            out = out.mul_trunc(ONE - a(i - mu.part(i)) * t, Y, D)
            out = out.mul_trunc(_geometric(_v(X, i), t, D), Y, D)
    return out


def skew_cauchy_check(mu, n, D):
    """twisted kernel times s_mu(x||a) against sum_nu s_nu(x||a) hat s_{nu/mu}(y||a)."""
    mu = Partition(mu)
    lhs = (twisted_kernel(mu, n, D) * double_schur(mu, n).poly).truncate(Y, D)
    total = poly_sum(
        double_schur(nu, n).poly * dual_schur_polynomial(SkewShape(nu, mu), n, D, Y)
        for nu in _parts(D + mu.size, n)
        if nu.contains(mu)
    ).truncate(Y, D)
    diff = lhs - total
    return {"identity": "skew", "mu": mu, "n": n, "degree": D, "ok": not diff,
            "first_difference": _first_difference(diff)}
