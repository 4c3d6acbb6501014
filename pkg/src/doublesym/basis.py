"""Expansions in the double Schur basis and Littlewood-Richardson polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import (
    A,
    ONE,
    X,
    ZERO,
    Poly,
    a,
    decode,
    exact_div_linear,
    format_poly,
    poly_sum,
)
from .double import (
    XPoly,
    a_point,
    double_schur,
    evaluate_double_schur,
    skew_double_schur,
)
from .errors import ColumnBoundViolated, DegenerateSpec, NotSymmetric
from .flagged import phi_signed, psi_signed
from .shapes import (
    EMPTY,
    Partition,
    SkewShape,
    growth_chains,
    lr_coefficient,
    partitions_between,
    partitions_containing,
    partitions_of,
)
from .tableaux import iter_barred_supertableaux


def _part_key(p):
    return (-p.size, tuple(-v for v in p))


class DoubleSym:
    """A Q[a]-linear combination of double Schur functions s_lam(x||a)."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs=None, n=None):
        self.coeffs = {Partition(k): v for k, v in (coeffs or {}).items() if v}
        self.n = n

    @classmethod
    def basis(cls, lam, n=None):
        return cls({Partition(lam): ONE}, n)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return DoubleSym(out, self.n)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return DoubleSym({k: v * c for k, v in self.coeffs.items()}, self.n)

    def __mul__(self, other):
        if not isinstance(other, DoubleSym):
            return self.scale(other)
        out = {}
        for lam, c1 in self.coeffs.items():
            for mu, c2 in other.coeffs.items():
                for nu, c in lr_expansion(lam, mu).items():
                    out[nu] = out.get(nu, ZERO) + c1 * c2 * c
        return DoubleSym(out, self.n)

    def __eq__(self, other):
        return isinstance(other, DoubleSym) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _part_key(kv[0]))

    def coefficient(self, lam):
        return self.coeffs.get(Partition(lam), ZERO)

    def __repr__(self):
        return f"DoubleSym({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for k, (lam, c) in enumerate(self.items()):
            label = f"s({','.join(map(str, lam))})"
            text = format_poly(c)
            neg = False
            if c.is_constant():
                v = c.constant_term()
                neg = v < 0
                mag = -v if neg else v
                body = label if mag == 1 else f"{format_poly(Poly.const(mag))}*{label}"
                if not lam:
                    body = format_poly(Poly.const(mag))
            else:
                body = f"[{text}]*{label}" if lam else f"[{text}]"
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def to_xpoly(self, n):
        return XPoly(poly_sum(double_schur(lam, n).poly * c for lam, c in self.coeffs.items()), n)

    def to_json(self):
        return {
            "basis": "double_schur",
            "coeffs": {",".join(map(str, lam)): c.to_json() for lam, c in self.items()},
        }


def omega_a(u):
    """s_lam(x||a) -> s_lam'(x||a'), written back in terms of the a_i."""
    return DoubleSym({lam.conjugate(): c.dualize() for lam, c in u.coeffs.items()}, u.n)


# -- expansion of a symmetric polynomial ------------------------------------

def _leading_partition(poly, n):
    """Top-degree, lexicographically largest x-exponent vector of a polynomial."""
    parts = poly.split(X)
    best = None
    for m in parts:
        vec = [0] * n
        for kind, i, e in decode(m):
            vec[i - 1] = e
        key = (sum(vec), vec)
        if best is None or key > best[0]:
            best = (key, m)
    (deg, vec), m = best
    return vec, parts[m]


def expand_elimination(P):
    """Peel off leading terms: the top monomial x^lam of s_lam(x||a) has coefficient 1."""
    if not isinstance(P, XPoly):
        raise TypeError("expected an XPoly")
    P.require_symmetric()
    n = P.n
    rest = P.poly
    out = {}
    while rest:
        vec, c = _leading_partition(rest, n)
        if any(vec[i] < vec[i + 1] for i in range(n - 1)):
            raise NotSymmetric("leading exponent is not a partition")
        lam = Partition(vec)
        out[lam] = out.get(lam, ZERO) + c
        rest = rest - double_schur(lam, n).poly * c
    return DoubleSym(out, n)


def weight_difference(nu, mu, n=None):
    """|a_nu| - |a_mu| as a linear form (only rows where nu and mu differ)."""
    nu, mu = Partition(nu), Partition(mu)
    rows = len(nu) if n is None else n
    return poly_sum(a(i - nu.part(i)) - a(i - mu.part(i)) for i in range(1, rows + 1))


def interpolate(value, mu, targets):
    """Coefficients c^nu_{P,mu} for nu in ``targets`` by the box recurrence.

    ``value(rho)`` must return P(a_rho).  The recurrence

        c^nu_mu = (sum_{mu -> mu+} c^nu_{mu+} - sum_{nu- -> nu} c^{nu-}_mu) / (|a_nu| - |a_mu|)

    starts from c^mu_mu = P(a_mu); division is exact.
    """
    mu = Partition(mu)
    memo = {}
    values = {}

    def val(rho):
        if rho not in values:
            values[rho] = value(rho)
        return values[rho]

    def c(m, v):
        if not v.contains(m):
            return ZERO
        if m == v:
            return val(m)
        key = (m, v)
        if key in memo:
            return memo[key]
        num = poly_sum(c(mp, v) for mp in m.add_box() if v.contains(mp))
        num = num - poly_sum(c(m, vm) for vm in v.remove_box() if vm.contains(m))
        out = exact_div_linear(num, weight_difference(v, m)) if num else ZERO
        memo[key] = out
        return out

    return {Partition(nu): c(mu, Partition(nu)) for nu in targets}


def expand_recurrence(P):
    """Expansion through the interpolation recurrence, using values P(a_rho)."""
    if not isinstance(P, XPoly):
        raise TypeError("expected an XPoly")
    P.require_symmetric()
    n = P.n
    deg = max(P.poly.degree(X), 0)
    targets = [nu for k in range(deg + 1) for nu in partitions_of(k) if len(nu) <= n]
    coeffs = interpolate(lambda rho: P.evaluate_at(a_point(rho, n)), EMPTY, targets)
    return DoubleSym(coeffs, n)


def expand_in_double_schur(P, method="elimination"):
    if method == "elimination":
        return expand_elimination(P)
    if method == "recurrence":
        return expand_recurrence(P)
    raise ValueError(f"unknown method {method!r}")


# -- Littlewood-Richardson polynomials ---------------------------------------

def ambient_n(*parts):
    return max((len(Partition(p)) for p in parts), default=0) + 1


@lru_cache(maxsize=None)
def lr_polynomial(lam, mu, nu):
    """Coefficient c^nu_{lam mu}(a) of s_nu in s_lam s_mu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not nu.contains(mu) or not nu.contains(lam) or nu.size > lam.size + mu.size:
        return ZERO
    n = ambient_n(lam, mu, nu)
    return interpolate(lambda rho: evaluate_double_schur(lam, a_point(rho, n)), mu, [nu])[nu]


@lru_cache(maxsize=None)
def lr_expansion(lam, mu):
    """s_lam s_mu = sum_nu c^nu_{lam mu}(a) s_nu."""
    lam, mu = Partition(lam), Partition(mu)
    out = {}
    for nu in partitions_containing(mu, lam.size + mu.size):
        if nu.size >= max(lam.size, mu.size) and nu.contains(lam):
            c = lr_polynomial(lam, mu, nu)
            if c:
                out[nu] = c
    return out


@lru_cache(maxsize=None)
def skew_expansion(nu, mu, n=None):
    """Expansion of the skew double Schur function s_{nu/mu} in the basis s_lam."""
    nu, mu = Partition(nu), Partition(mu)
    if n is None:
        n = ambient_n(nu)
    P = skew_double_schur(SkewShape(nu, mu), n, "rho_sum")
    return expand_recurrence(P)


def dual_lr_via_skew(lam, mu, nu):
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not nu.contains(mu) or not nu.contains(lam):
        return ZERO
    return skew_expansion(nu, mu).coefficient(lam)


def dual_lr_via_supertableaux(lam, mu, nu, n=None):
    """Sum over growth chains to lam and barred supertableaux of nu/mu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not nu.contains(mu):
        return ZERO
    theta = SkewShape(nu, mu)
    if n is None:
        n = max(theta.column_lengths(), default=0)
        n = max(n, 1)
    if any(c > n for c in theta.column_lengths()):
        raise ColumnBoundViolated(f"{theta} has a column longer than {n}")
    total = []
    for chain in growth_chains(EMPTY, lam):
        for T, barred, rho in iter_barred_supertableaux(theta, chain, n):
            bset = set(barred)
            term = ONE
            for (i, j), (t, primed) in T.items():
                c = j - i
                if primed:
                    term = term * (a(t - c) - a(t))
                elif (i, j) not in bset:
                    term = term * (a(t - rho[(i, j)].part(t)) - a(t - c))
                if not term:
                    break
            total.append(term)
    return poly_sum(total)


def dual_lr_via_classical(lam, mu, nu):
    """Contraction of classical LR coefficients against phi, phi and psi."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not nu.contains(mu) or not nu.contains(lam):
        return ZERO
    top = nu.size
    total = []
    alphas = [al for al in partitions_containing(lam, top) if phi_signed(al, lam)]
    betas = [be for be in partitions_containing(mu, top) if phi_signed(be, mu)]
    gammas = [ga for ga in partitions_between(EMPTY, nu) if psi_signed(nu, ga)]
    for al in alphas:
        for be in betas:
            if al.size + be.size > top:
                continue
            for ga in gammas:
                c = lr_coefficient(al, be, ga)
                if c:
                    total.append(phi_signed(al, lam) * phi_signed(be, mu) * psi_signed(nu, ga) * c)
    return poly_sum(total)


def dual_lr(lam, mu, nu, method="skew", n=None):
    if method == "skew":
        return dual_lr_via_skew(lam, mu, nu)
    if method == "tableau":
        return dual_lr_via_supertableaux(lam, mu, nu, n)
    if method == "classical":
        return dual_lr_via_classical(lam, mu, nu)
    raise ValueError(f"unknown method {method!r}")


# -- rational chain sums under numeric specializations -----------------------

def _abs_a(rho, spec, rows):
    return sum((Fraction(spec.value(i - rho.part(i))) for i in range(1, rows + 1)), Fraction(0))


def chain_sum(point_value, mu, nu, spec):
    """Sum over chains mu -> ... -> nu of P(a_rho(k)) / prod_{j != k} (|a_rho(k)| - |a_rho(j)|)."""
    mu, nu = Partition(mu), Partition(nu)
    rows = len(nu)
    cache = {}
    total = Fraction(0)
    for chain in growth_chains(mu, nu):
        sizes = [_abs_a(r, spec, rows) for r in chain.chain]
        for k, rho in enumerate(chain.chain):
            den = Fraction(1)
            for j, s in enumerate(sizes):
                if j != k:
                    diff = sizes[k] - s
                    if diff == 0:
                        raise DegenerateSpec(f"|a_rho| values coincide along a chain to {nu} under {spec}")
                    den *= diff
            if rho not in cache:
                cache[rho] = Fraction(point_value(rho))
            total += cache[rho] / den
    return total.numerator if total.denominator == 1 else total


def _num_point(rho, n, spec):
    return [Fraction(spec.value(i - Partition(rho).part(i))) for i in range(1, n + 1)]


def _num_double_schur(lam, point, spec, shift=0):
    """s_lam(x||a) at a numeric point, everything numeric."""
    return evaluate_double_schur(lam, [Poly.const(v) for v in point], shift).evaluate(spec)


def _num_complete(k, point, spec):
    if k == 0:
        return Fraction(1)
    return _num_double_schur(Partition((k,)), point, spec)


def rational_interpolation_eval(kind, args, spec):
    """Numeric value of a transition polynomial from the rational chain sums.

    kinds: ``kostka_dual`` (args lam, mu), ``character`` (lam, mu),
    ``dual_lr`` (lam, mu, nu) and ``lr`` (lam, mu, nu).
    """
    parts = [Partition(p) for p in args]
    if kind == "kostka_dual":
        lam, mu = parts
        n = ambient_n(lam, mu)

        def value(rho):
            pt = _num_point(rho, n, spec)
            out = Fraction(1)
            for k in mu:
                out *= _num_complete(k, pt, spec)
            return out

        return chain_sum(value, EMPTY, lam, spec)
    if kind == "character":
        lam, mu = parts
        n = ambient_n(lam, mu)

        def value(rho):
            pt = _num_point(rho, n, spec)
            out = Fraction(1)
            for k in mu:
                out *= sum((pt[i - 1] ** k - Fraction(spec.value(i)) ** k for i in range(1, n + 1)), Fraction(0))
            return out

        return chain_sum(value, EMPTY, lam, spec)
    if kind == "dual_lr":
        lam, mu, nu = parts
        if not nu.contains(mu):
            return 0
        n = ambient_n(lam, mu, nu)
        P = skew_double_schur(SkewShape(nu, mu), n, "rho_sum")
        return chain_sum(lambda rho: P.evaluate_at(a_point(rho, n)).evaluate(spec), EMPTY, lam, spec)
    if kind == "lr":
        lam, mu, nu = parts
        n = ambient_n(lam, mu, nu)
        return chain_sum(lambda rho: _num_double_schur(lam, _num_point(rho, n, spec), spec), mu, nu, spec)
    raise ValueError(f"unknown kind {kind!r}")


# -- Graham positivity -------------------------------------------------------

def consecutive_differences(p):
    """Rewrite p in b_i = a_i - a_{i+1}.

    With m the smallest index present, substitute a_m = 0 and
    a_i = -(b_m + ... + b_{i-1}) for i > m.  Returns the rewritten
    polynomial (in the b variables) and whether the rewriting is faithful,
    i.e. p is unchanged by a common shift of all a_i.
    """
    from .algebra import B

    idx = p.indices(A)
    if not idx:
        return p, True
    m, top = idx[0], idx[-1]
    mapping = {}
    running = ZERO
    for i in range(m, top + 1):
        mapping[(A, i)] = -running
        running = running + Poly.var(B, i)
    q = p.substitute(mapping)
    back = q.substitute({(B, i): a(i) - a(i + 1) for i in range(m, top)})
    return q, back == p


def is_graham_positive(p):
    q, faithful = consecutive_differences(p)
    if not faithful:
        return False
    return all(isinstance(c, int) and c >= 0 for c in q.terms.values())

