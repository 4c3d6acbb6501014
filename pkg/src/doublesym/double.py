"""Double Schur polynomials and their relatives in finitely many variables."""

from __future__ import annotations

from functools import lru_cache

from .algebra import (
    ONE,
    X,
    Y,
    ZERO,
    Poly,
    a,
    decode,
    det,
    exact_div_linear,
    format_poly,
    poly_sum,
    x,
    y,
)
from .errors import NotSymmetric
from .shapes import Partition, SkewShape, as_skew, partitions_between
from .tableaux import reverse_tableaux, semistandard_tableaux, super_tableaux


class XPoly:
    """A polynomial in x_1..x_n (and possibly y_1..y_n) with coefficients in Q[a]."""

    __slots__ = ("poly", "n")

    def __init__(self, poly, n):
        self.poly = poly
        self.n = n

    def __add__(self, other):
        return XPoly(self.poly + _unwrap(other), self.n)

    __radd__ = __add__

    def __sub__(self, other):
        return XPoly(self.poly - _unwrap(other), self.n)

    def __rsub__(self, other):
        return XPoly(_unwrap(other) - self.poly, self.n)

    def __neg__(self):
        return XPoly(-self.poly, self.n)

    def __mul__(self, other):
        return XPoly(self.poly * _unwrap(other), self.n)

    __rmul__ = __mul__

    def __pow__(self, k):
        return XPoly(self.poly ** k, self.n)

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"XPoly(n={self.n}, {self})"

    def __str__(self):
        return format_xpoly(self.poly)

    def shift(self, k):
        return XPoly(self.poly.shift(k), self.n)

    def dualize(self):
        return XPoly(self.poly.dualize(), self.n)

    def x_degree(self):
        return self.poly.degree(X)

    def is_symmetric(self, kinds=(X,)):
        for kind in kinds:
            for i in range(1, self.n):
                if _swap(self.poly, kind, i, i + 1) != self.poly:
                    return False
        return True

    def require_symmetric(self):
        if not self.is_symmetric():
            raise NotSymmetric(f"polynomial is not symmetric in x1..x{self.n}")
        return self

    def evaluate_at(self, point):
        """Substitute x_i <- point[i-1]; returns a Poly."""
        if len(point) != self.n:
            raise ValueError(f"evaluation point must have {self.n} entries")
        return self.poly.substitute({(X, i): v for i, v in enumerate(point, 1)})

    def restrict_last(self, value):
        """Substitute x_n <- value and drop to n-1 variables."""
        return XPoly(self.poly.substitute({(X, self.n): value}), self.n - 1)

    def to_json(self):
        terms = []
        for xm, coeff in sorted_x_terms(self.poly):
            xexp = [0] * self.n
            yexp = {}
            for kind, i, e in decode(xm):
                if kind == X:
                    xexp[i - 1] = e
                else:
                    yexp[str(i)] = e
            item = {"xexp": xexp, **coeff.to_json()}
            if yexp:
                item["yexp"] = yexp
            terms.append(item)
        return {"n": self.n, "terms": terms}


def _unwrap(v):
    return v.poly if isinstance(v, XPoly) else v


def _swap(p, kind, i, j):
    def fn(k, idx):
        if k == kind and idx in (i, j):
            return k, i + j - idx, 1
        return k, idx, 1

    return p._remap(fn)


def sorted_x_terms(poly, kinds=(X, Y)):
    """(x-monomial, coefficient) pairs by descending degree, then descending exponents."""
    parts = poly.split(*kinds)
    top = max((i for m in parts for _, i, _ in decode(m)), default=0)

    def key(item):
        m = item[0]
        exps = dict(((k, i), e) for k, i, e in decode(m))
        vec = tuple(exps.get((k, i), 0) for k in kinds for i in range(1, top + 1))
        return (-sum(vec), tuple(-v for v in vec))

    return sorted(parts.items(), key=key)


def format_xpoly(poly):
    if not poly:
        return "0"
    pieces = []
    for n, (xm, coeff) in enumerate(sorted_x_terms(poly)):
        mono = "*".join(
            (f"{'x' if kind == X else 'y'}{i}" + (f"^{e}" if e > 1 else ""))
            for kind, i, e in decode(xm)
        )
        ctext = format_poly(coeff)
        if not mono:
            body = ctext if len(coeff) == 1 else f"[{ctext}]"
            if n and len(coeff) == 1 and ctext.startswith("-"):
                pieces.append(" - " + ctext[1:])
                continue
        elif ctext == "1":
            body = mono
        elif ctext == "-1":
            pieces.append(("-" if not n else " - ") + mono)
            continue
        else:
            body = f"[{ctext}]*{mono}"
        pieces.append(body if not n else " + " + body)
    return "".join(pieces)


def xpoly_from_json(data):
    terms = []
    n = data["n"]
    for item in data["terms"]:
        coeff = Poly.from_json(item)
        mono = ONE
        for i, e in enumerate(item["xexp"], 1):
            if e:
                mono = mono * x(i) ** e
        for i, e in item.get("yexp", {}).items():
            mono = mono * y(int(i)) ** e
        terms.append(coeff * mono)
    return XPoly(poly_sum(terms), n)


def parse_xpoly(text, n):
    from .algebra import parse_poly

    return XPoly(parse_poly(text), n)


# -- double Schur polynomials ----------------------------------------------

def double_schur_tableau(lam, n):
    """Sum over reverse tableaux with entries <= n of prod (x_T - a_{T-c})."""
    lam = Partition(lam)
    if len(lam) > n:
        return XPoly(ZERO, n)
    total = []
    for T in reverse_tableaux(lam, n):
        term = ONE
        for (i, j), t in T.items():
            term = term * (x(t) - a(t - (j - i)))
        total.append(term)
    return XPoly(poly_sum(total), n)


def reverse_strip_sum(theta, n, weight):
    """Reverse-tableau sum grouped by horizontal strips.

    ``weight(k, content)`` is the factor of a cell holding entry ``k``.  The
    cells holding 1 form a horizontal strip on the outer rim, those holding 2
    the next strip, and so on.
    """
    theta = as_skew(theta)
    inner = theta.inner
    memo = {}

    def G(kappa, k):
        if kappa == inner:
            return ONE
        if k > n:
            return ZERO
        key = (kappa, k)
        if key in memo:
            return memo[key]
        acc = []
        for rho in _strips_below(kappa, inner):
            sub = G(rho, k + 1)
            if not sub:
                continue
            w = ONE
            for i in range(1, len(kappa) + 1):
                for j in range(rho.part(i) + 1, kappa.part(i) + 1):
                    w = w * weight(k, j - i)
            acc.append(w * sub)
        memo[key] = poly_sum(acc)
        return memo[key]

    return G(theta.outer, 1)


@lru_cache(maxsize=None)
def _strips_below_cached(kappa, inner):
    out = []

    def rec(i, acc):
        if i > len(kappa):
            out.append(Partition(acc))
            return
        lo = max(inner.part(i), kappa.part(i + 1))
        for p in range(lo, kappa.part(i) + 1):
            rec(i + 1, acc + [p])

    rec(1, [])
    return tuple(out)


def _strips_below(kappa, inner):
    """rho with inner ⊆ rho ⊆ kappa and kappa/rho a horizontal strip."""
    return _strips_below_cached(Partition(kappa), Partition(inner))


@lru_cache(maxsize=None)
def _double_schur_cached(lam, n):
    if len(lam) > n:
        return ZERO
    return reverse_strip_sum(lam, n, lambda k, c: x(k) - a(k - c))


def double_schur(lam, n):
    """s_lam(x||a) in n variables (strip-grouped tableau sum, cached)."""
    return XPoly(_double_schur_cached(Partition(lam), n), n)


def skew_reverse_polynomial(theta, n):
    """The reverse-tableau polynomial over a skew shape (not stable in n)."""
    return XPoly(reverse_strip_sum(as_skew(theta), n, lambda k, c: x(k) - a(k - c)), n)


def evaluate_double_schur(lam, point, shift=0):
    """s_lam(x||tau^shift a) at x = point, without building the polynomial."""
    lam = Partition(lam)
    n = len(point)
    if len(lam) > n:
        return ZERO
    return reverse_strip_sum(lam, n, lambda k, c: point[k - 1] - a(k - c + shift))


def falling(v, r, n):
    """(v||a)^r = (v - a_n)(v - a_{n-1})...(v - a_{n-r+1})."""
    out = ONE
    for k in range(r):
        out = out * (v - a(n - k))
    return out


def vandermonde(n, var=x):
    out = ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (var(i) - var(j))
    return out


def double_schur_alternant(lam, n):
    """A_{lam+delta}(x||a) / A_delta(x||a), divided one linear factor at a time."""
    lam = Partition(lam)
    if len(lam) > n:
        return XPoly(ZERO, n)
    alpha = [lam.part(j) + n - j for j in range(1, n + 1)]
    matrix = [[falling(x(i), alpha[j], n) for j in range(n)] for i in range(1, n + 1)]
    num = det(matrix)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num = exact_div_linear(num, x(i) - x(j))
    return XPoly(num, n)


def double_ehp(kind, k, n, shift=0):
    """Double e_k, h_k or p_k in n variables with a replaced by tau^shift a."""
    if k < 0:
        return XPoly(ZERO, n)
    if kind == "e":
        return double_schur(Partition((1,) * k), n).shift(shift)
    if kind == "h":
        return double_schur(Partition((k,) if k else ()), n).shift(shift)
    if kind == "p":
        if k == 0:
            return XPoly(ONE, n)
        return XPoly(poly_sum(x(i) ** k - a(i + shift) ** k for i in range(1, n + 1)), n)
    raise ValueError(f"unknown family {kind!r}")


def e_combinatorial(k, n, shift=0):
    """Sum over i_1 > ... > i_k of prod (x_{i_r} - a_{i_r + r - 1})."""
    total = []

    def rec(r, top, term):
        if r > k:
            total.append(term)
            return
        for i in range(top, 0, -1):
            rec(r + 1, i - 1, term * (x(i) - a(i + r - 1 + shift)))

    rec(1, n, ONE)
    return XPoly(poly_sum(total), n)


def h_combinatorial(k, n, shift=0):
    """Sum over i_1 >= ... >= i_k of prod (x_{i_r} - a_{i_r - r + 1})."""
    total = []

    def rec(r, top, term):
        if r > k:
            total.append(term)
            return
        for i in range(top, 0, -1):
            rec(r + 1, i, term * (x(i) - a(i - r + 1 + shift)))

    rec(1, n, ONE)
    return XPoly(poly_sum(total), n)


def jacobi_trudi(lam, n):
    """det[h_{lam_i - i + j}(x || tau^{j-1} a)]."""
    lam = Partition(lam)
    ell = len(lam)
    mat = [
        [double_ehp("h", lam.part(i) - i + j, n, j - 1).poly for j in range(1, ell + 1)]
        for i in range(1, ell + 1)
    ]
    return XPoly(det(mat), n)


def nagelsbach_kostka(lam, n):
    """det[e_{lam'_i - i + j}(x || tau^{-j+1} a)]."""
    lc = Partition(lam).conjugate()
    ell = len(lc)
    mat = [
        [double_ehp("e", lc.part(i) - i + j, n, -j + 1).poly for j in range(1, ell + 1)]
        for i in range(1, ell + 1)
    ]
    return XPoly(det(mat), n)


# -- factorial and skew double Schur ------------------------------------------

def u_sequence(rule, n):
    """The u-sequence for factorial Schur polynomials, derived from a.

    ``reversed``: u_i = a_{n-i+1};  ``negated``: u_i = -a_i.
    """
    if rule == "reversed":
        return lambda i: a(n - i + 1)
    if rule == "negated":
        return lambda i: -a(i)
    raise ValueError(f"unknown u-sequence rule {rule!r}")


def factorial_schur(theta, n, u="reversed", var=x):
    """Sum over semistandard tableaux (entries <= n) of prod (v_T - u_{T+c})."""
    theta = as_skew(theta)
    useq = u_sequence(u, n) if isinstance(u, str) else u
    total = []
    for T in semistandard_tableaux(theta, n):
        term = ONE
        for (i, j), t in T.items():
            term = term * (var(t) - useq(t + j - i))
        total.append(term)
    return XPoly(poly_sum(total), n)


def _primed_at_minus_a(theta, n):
    """s_theta(y | -a) evaluated at y_i = -a_i, i <= n."""
    theta = as_skew(theta)
    total = []
    for T in semistandard_tableaux(theta, n):
        term = ONE
        for (i, j), t in T.items():
            term = term * (a(t + j - i) - a(t))
            if not term:
                break
        total.append(term)
    return poly_sum(total)


def skew_double_schur(theta, n, method="supertableau_A"):
    """s_{nu/mu}(x||a) in n variables by one of three formulas."""
    theta = as_skew(theta)
    if method in ("supertableau_A", "supertableau_Aprime"):
        shift = 1 if method == "supertableau_A" else 0
        ordering = "A" if method == "supertableau_A" else "Aprime"
        total = []
        for T in super_tableaux(theta, n, n, ordering):
            term = ONE
            for (i, j), (t, primed) in T.items():
                c = j - i
                if primed:
                    term = term * (a(-c + shift) - a(t))
                else:
                    term = term * (x(t) - a(-c + shift))
                if not term:
                    break
            total.append(term)
        return XPoly(poly_sum(total), n)
    if method == "rho_sum":
        nu, mu = theta.outer, theta.inner
        total = []
        for rho in partitions_between(mu, nu):
            coeff = _primed_at_minus_a(SkewShape(rho.conjugate(), mu.conjugate()), n)
            if coeff:
                total.append(skew_reverse_polynomial(SkewShape(nu, rho), n).poly * coeff)
        return XPoly(poly_sum(total), n)
    raise ValueError(f"unknown method {method!r}")


def supersymmetric_schur(theta, nx, ny=None, ordering="A"):
    """s_theta(x/y||a) with x_1..x_nx and y_1..y_ny."""
    theta = as_skew(theta)
    if ny is None:
        ny = nx
    shift = 1 if ordering == "A" else 0
    total = []
    for T in super_tableaux(theta, nx, ny, ordering):
        term = ONE
        for (i, j), (t, primed) in T.items():
            c = j - i
            if primed:
                term = term * (y(t) + a(-c + shift))
            else:
                term = term * (x(t) - a(-c + shift))
        total.append(term)
    return XPoly(poly_sum(total), nx)


def supersymmetric_rho_sum(theta, nx, ny=None):
    """The same function from reverse tableaux in x and factorial Schur in y."""
    theta = as_skew(theta)
    if ny is None:
        ny = nx
    nu, mu = theta.outer, theta.inner
    total = []
    for rho in partitions_between(mu, nu):
        fy = factorial_schur(SkewShape(rho.conjugate(), mu.conjugate()), ny, "negated", var=y).poly
        if fy:
            total.append(skew_reverse_polynomial(SkewShape(nu, rho), nx).poly * fy)
    return XPoly(poly_sum(total), nx)


def swap_xy(p):
    """Exchange the roles of the x and y variables."""
    return p._remap(lambda k, i: ((Y if k == X else X if k == Y else k), i, 1))


def classical_schur(theta, n, var=x):
    """Classical (skew) Schur polynomial by semistandard tableaux."""
    total = []
    for T in semistandard_tableaux(as_skew(theta), n):
        term = ONE
        for t in T.values():
            term = term * var(t)
        total.append(term)
    return XPoly(poly_sum(total), n)


def a_point(mu, n, shift=0):
    """The evaluation point a_mu = (a_{1-mu_1}, ..., a_{n-mu_n})."""
    mu = Partition(mu)
    return [a(i - mu.part(i) + shift) for i in range(1, n + 1)]


def hook_value(lam):
    """prod over boxes (i,j) of lam of (a_{i-lam_i} - a_{lam'_j-j+1})."""
    lam = Partition(lam)
    lc = lam.conjugate()
    out = ONE
    for i, j in lam.cells():
        out = out * (a(i - lam.part(i)) - a(lc.part(j) - j + 1))
    return out


def minus_a_point(n):
    return [-a(i) for i in range(1, n + 1)]

