"""Degree-truncated series of symmetric functions with coefficients in Q[a].

A :class:`SchurSeries` stores coefficients either on the classical Schur
functions s_lam(x) (``basis="schur"``) or on the dual Schur functions
hat s_lam(x||a) (``basis="dual"``), for |lam| <= D.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .algebra import ONE, X, Y, ZERO, Poly, a, decode, det, exact_div_linear, format_poly, poly_sum
from .basis import lr_polynomial
from .double import classical_schur
from .errors import TruncationTooSmall, WrongBasis
from .flagged import phi_determinant, phi_signed, psi_signed
from .shapes import (
    EMPTY,
    Partition,
    as_skew,
    hook_partition,
    n_boxes_below,
    parse_partition,
    partitions_containing,
    partitions_of,
    schur_product,
)

BASES = ("schur", "dual")


def _key(p):
    return (p.size, tuple(-v for v in p))


class SchurSeries:
    __slots__ = ("basis", "degree", "coeffs")

    def __init__(self, coeffs, degree, basis="schur"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = degree
        self.coeffs = {
            Partition(k): v for k, v in coeffs.items() if v and Partition(k).size <= degree
        }

    @classmethod
    def one(cls, degree, basis="schur"):
        return cls({EMPTY: ONE}, degree, basis)

    def _check(self, other):
        if self.basis != other.basis:
            raise WrongBasis(f"cannot combine {self.basis} and {other.basis} series")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return SchurSeries(out, min(self.degree, other.degree), self.basis)

    def __neg__(self):
        return SchurSeries({k: -v for k, v in self.coeffs.items()}, self.degree, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SchurSeries({k: v * c for k, v in self.coeffs.items()}, self.degree, self.basis)

    def __mul__(self, other):
        if isinstance(other, SchurSeries):
            return series_mul(self, other, min(self.degree, other.degree))
        return self.scale(other)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, SchurSeries)
            and self.basis == other.basis
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def coefficient(self, lam):
        return self.coeffs.get(Partition(lam), ZERO)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _key(kv[0]))

    def truncate(self, degree):
        return SchurSeries(self.coeffs, degree, self.basis)

    def restrict_length(self, n):
        """Drop coefficients on partitions with more than n parts."""
        return SchurSeries({k: v for k, v in self.coeffs.items() if len(k) <= n}, self.degree, self.basis)

    def map_coeffs(self, fn):
        return SchurSeries({k: fn(v) for k, v in self.coeffs.items()}, self.degree, self.basis)

    def shift(self, k):
        """Apply tau^k to the a-coefficients.

        For a classical-basis series this is the shift of the whole series.
        """
        return self.map_coeffs(lambda c: c.shift(k))

    def dualize(self):
        return self.map_coeffs(lambda c: c.dualize())

    def to_dual(self):
        if self.basis == "dual":
            return self
        out = {}
        for mu, c in self.coeffs.items():
            for lam in partitions_containing(mu, self.degree):
                w = psi_signed(lam, mu)
                if w:
                    out[lam] = out.get(lam, ZERO) + c * w
        return SchurSeries(out, self.degree, "dual")

    def to_schur(self):
        if self.basis == "schur":
            return self
        out = {}
        for mu, c in self.coeffs.items():
            for lam in partitions_containing(mu, self.degree):
                w = phi_signed(lam, mu)
                if w:
                    out[lam] = out.get(lam, ZERO) + c * w
        return SchurSeries(out, self.degree, "schur")

    def to_polynomial(self, n, var=Y):
        """The classical-basis series as a polynomial in var_1..var_n (x-degree <= D)."""
        s = self.to_schur()
        total = []
        for lam, c in s.coeffs.items():
            if len(lam) <= n:
                total.append(_classical_in(lam, n, var) * c)
        return poly_sum(total)

    def __repr__(self):
        return f"SchurSeries({self.basis}, D={self.degree}: {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        sym = "s" if self.basis == "schur" else "S"
        out = []
        for k, (lam, c) in enumerate(self.items()):
            label = f"{sym}({','.join(map(str, lam))})"
            if c.is_constant():
                v = c.constant_term()
                mag = -v if v < 0 else v
                body = label if mag == 1 else f"{format_poly(Poly.const(mag))}*{label}"
                sep = " - " if v < 0 else " + "
                out.append(("-" + body if v < 0 else body) if k == 0 else sep + body)
            else:
                body = f"[{format_poly(c)}]*{label}"
                out.append(body if k == 0 else " + " + body)
        return "".join(out)

    def to_json(self):
        return {
            "basis": self.basis,
            "degree": self.degree,
            "coeffs": {",".join(map(str, lam)): c.to_json() for lam, c in self.items()},
        }

    @classmethod
    def from_json(cls, data):
        coeffs = {parse_partition(k): Poly.from_json(v) for k, v in data["coeffs"].items()}
        return cls(coeffs, data["degree"], data["basis"])


@lru_cache(maxsize=None)
def _classical_in(lam, n, var):
    from .algebra import Poly as _P

    return classical_schur(lam, n, var=lambda i: _P.var(var, i)).poly


def series_mul(s, t, D=None):
    """Truncated product; dual-basis inputs are multiplied through the classical basis."""
    if s.basis != t.basis:
        raise WrongBasis("series_mul needs both factors in the same basis")
    if D is None:
        D = min(s.degree, t.degree)
    basis = s.basis
    s1, t1 = s.to_schur(), t.to_schur()
    out = {}
    for al, c1 in s1.coeffs.items():
        for be, c2 in t1.coeffs.items():
            if al.size + be.size > D:
                continue
            prod = c1 * c2
            for ga, c in schur_product(al, be).items():
                out[ga] = out.get(ga, ZERO) + prod.scale(c)
    res = SchurSeries(out, D, "schur")
    return res.to_dual() if basis == "dual" else res


def omega_hat(s):
    """s_lam(x) -> s_lam'(x) on a classical-basis series, coefficients untouched."""
    if s.basis != "schur":
        raise WrongBasis("omega_hat acts on classical-basis series")
    return SchurSeries({lam.conjugate(): c for lam, c in s.coeffs.items()}, s.degree, "schur")


# -- classical Schur coefficients of a symmetric polynomial -------------------

def schur_coefficients(poly, n, degree, var=X):
    """Classical Schur coefficients of a symmetric polynomial in var_1..var_n.

    The coefficient of s_lam is sum over permutations sigma of
    sgn(sigma) [var^{lam + delta - sigma(delta)}] poly.
    """
    parts = poly.split(var)
    table = {}
    for m, c in parts.items():
        vec = [0] * n
        for kind, i, e in decode(m):
            vec[i - 1] = e
        table[tuple(vec)] = c
    delta = list(range(n - 1, -1, -1))
    perms = [(p, _sign(p)) for p in permutations(range(n))]
    out = {}
    for k in range(degree + 1):
        for lam in partitions_of(k):
            if len(lam) > n:
                continue
            acc = []
            for p, sg in perms:
                vec = tuple(lam.part(i + 1) + delta[i] - delta[p[i]] for i in range(n))
                if min(vec) < 0:
                    continue
                c = table.get(vec)
                if c:
                    acc.append(c if sg > 0 else -c)
            val = poly_sum(acc)
            if val:
                out[lam] = val
    return out


def _sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


# -- dual Schur functions ------------------------------------------------------

def _geometric(coef, v, bound):
    """1/(1 - coef*v) truncated at v-degree ``bound``."""
    out = ONE
    power = ONE
    for _ in range(bound):
        power = power * coef * v
        out = out + power
    return out


def x_factor(i, g, h, bound, var=X):
    """X_i(g,h) = x_i prod_{j<i}(1 - g x_j) / prod_{j<=i}(1 - h x_j), truncated."""
    xv = lambda j: Poly.var(var, j)
    out = xv(i)
    for j in range(1, i):
        out = out.mul_trunc(ONE - g * xv(j), var, bound)
    for j in range(1, i + 1):
        out = out.mul_trunc(_geometric(h, xv(j), bound), var, bound)
    return out


def dual_schur_polynomial(theta, n, degree, var=X):
    """Tableau formula for the (skew) dual Schur function in n variables, x-degree <= degree."""
    theta = as_skew(theta)
    cache = {}

    def weight(k, c):
        key = (k, c)
        if key not in cache:
            cache[key] = x_factor(k, a(-c + 1), a(-c), degree, var)
        return cache[key]

    return _strip_sum_trunc(theta, n, weight, var, degree)


def _strip_sum_trunc(theta, n, weight, var, degree):
    from .double import _strips_below

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
            w = sub
            for i in range(1, len(kappa) + 1):
                for j in range(rho.part(i) + 1, kappa.part(i) + 1):
                    w = w.mul_trunc(weight(k, j - i), var, degree)
            acc.append(w)
        memo[key] = poly_sum(acc)
        return memo[key]

    return G(theta.outer, 1)


def dual_schur_alternant_polynomial(lam, n, degree, var=X):
    """A_{lam+delta}(x,a)/A_delta(x,a) expanded to x-degree ``degree``."""
    lam = Partition(lam)
    if len(lam) > n:
        return ZERO
    d = lam.d
    vdeg = n * (n - 1) // 2
    bound = degree + vdeg
    xv = lambda i: Poly.var(var, i)
    matrix = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            beta = lam.part(j) + n - j
            entry = xv(i) ** beta
            if j <= d:
                for k in range(j - lam.part(j), 1):
                    entry = entry.mul_trunc(_geometric(a(k), xv(i), bound), var, bound)
            else:
                for k in range(1, j - lam.part(j)):
                    entry = entry * (ONE - a(k) * xv(i))
            row.append(entry.truncate(var, bound))
        matrix.append(row)
    num = ZERO
    for p in permutations(range(n)):
        term = ONE
        for i in range(n):
            term = term.mul_trunc(matrix[i][p[i]], var, bound)
            if not term:
                break
        num = num + term if _sign(p) > 0 else num - term
    num = num.truncate(var, bound)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num = exact_div_linear(num, xv(i) - xv(j))
    return num


def dual_schur(mu, D, method="flagged", n=None):
    """hat s_mu(x||a) as a classical-basis series truncated at degree D."""
    mu = Partition(mu)
    if D < mu.size:
        raise TruncationTooSmall(f"degree {D} is below |{mu}| = {mu.size}")
    if method == "flagged":
        coeffs = {lam: phi_signed(lam, mu) for lam in partitions_containing(mu, D)}
        return SchurSeries(coeffs, D)
    if method == "determinant":
        coeffs = {}
        for lam in partitions_containing(mu, D):
            if lam.d == mu.d:
                coeffs[lam] = phi_determinant(lam, mu).scale((-1) ** n_boxes_below(lam, mu))
        return SchurSeries(coeffs, D)
    if n is None:
        n = max(len(mu), 1)
    if method == "combinatorial":
        poly = dual_schur_polynomial(mu, n, D)
    elif method == "alternant":
        poly = dual_schur_alternant_polynomial(mu, n, D)
    else:
        raise ValueError(f"unknown method {method!r}")
    return SchurSeries(schur_coefficients(poly, n, D), D)


def schur_to_dual(mu, D):
    """s_mu(x) as a dual-basis series."""
    mu = Partition(mu)
    if D < mu.size:
        raise TruncationTooSmall(f"degree {D} is below |{mu}| = {mu.size}")
    return SchurSeries({EMPTY if not mu else mu: ONE}, D, "schur").to_dual()


def dual_ehp(kind, k, shift, D):
    """hat e_k or hat h_k with tau^shift applied, classical basis."""
    if k < 0:
        return SchurSeries({}, D)
    if k == 0:
        return SchurSeries.one(D)
    shape = Partition((1,) * k) if kind == "e" else Partition((k,))
    if kind not in ("e", "h"):
        raise ValueError(f"unknown family {kind!r}")
    if D < k:
        return SchurSeries({}, D)
    return dual_schur(shape, D).shift(shift)


def dual_determinant(theta, D, kind="jacobi_trudi"):
    """Dual Jacobi-Trudi, Nagelsbach-Kostka or Giambelli determinant."""
    theta = as_skew(theta)
    lam, mu = theta.outer, theta.inner
    one = SchurSeries.one(D)
    if kind == "jacobi_trudi":
        ell = max(len(lam), 1)
        mat = [
            [dual_ehp("h", lam.part(i) - mu.part(j) - i + j, -mu.part(j) + j - 1, D) for j in range(1, ell + 1)]
            for i in range(1, ell + 1)
        ]
        return det(mat, one) if lam else one
    if kind == "nagelsbach_kostka":
        lc, mc = lam.conjugate(), mu.conjugate()
        ell = max(len(lc), 1)
        mat = [
            [dual_ehp("e", lc.part(i) - mc.part(j) - i + j, mc.part(j) - j + 1, D) for j in range(1, ell + 1)]
            for i in range(1, ell + 1)
        ]
        return det(mat, one) if lam else one
    if kind == "giambelli":
        if mu:
            raise ValueError("the Giambelli determinant needs a straight shape")
        fr = lam.frobenius()
        d = len(fr.alpha)
        mat = [
            [dual_schur(hook_partition(fr.alpha[i], fr.beta[j]), D) for j in range(d)]
            for i in range(d)
        ]
        return det(mat, one)
    raise ValueError(f"unknown determinant {kind!r}")


def skew_dual_schur(theta, D, n):
    """Tableau formula for hat s_theta in n variables, as classical Schur coefficients."""
    theta = as_skew(theta)
    poly = dual_schur_polynomial(theta, n, D)
    return SchurSeries(schur_coefficients(poly, n, D), D)


def skew_dual_via_lr(theta, D):
    """sum_lam c^nu_{lam mu}(a) hat s_lam as a dual-basis series."""
    theta = as_skew(theta)
    nu, mu = theta.outer, theta.inner
    coeffs = {}
    for k in range(D + 1):
        for lam in partitions_of(k):
            if nu.contains(lam) or lam.size >= nu.size - mu.size:
                c = lr_polynomial(lam, mu, nu)
                if c:
                    coeffs[lam] = c
    return SchurSeries(coeffs, D, "dual")
