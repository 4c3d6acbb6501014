"""Partitions, skew diagrams and classical partition combinatorics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped, so ``Partition((2, 1, 0)) == Partition((2, 1))``.
    """

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise ValueError(f"parts must weakly decrease: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"

    def part(self, i):
        """Part ``i`` with 1-based indexing; zero beyond the length."""
        return tuple.__getitem__(self, i - 1) if 1 <= i <= len(self) else 0

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        return _conjugate(tuple(self))

    def contains(self, other):
        other = Partition(other)
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    @property
    def d(self):
        """Number of boxes on the main diagonal."""
        return sum(1 for i, p in enumerate(self, 1) if p >= i)

    def cells(self):
        return [(i, j) for i, p in enumerate(self, 1) for j in range(1, p + 1)]

    def contents(self):
        return [j - i for i, j in self.cells()]

    def add_box(self):
        """Partitions obtained by adding one box, in row order."""
        out = []
        parts = list(self)
        for i in range(len(parts) + 1):
            prev = parts[i - 1] if i > 0 else None
            cur = parts[i] if i < len(parts) else 0
            if prev is None or prev > cur:
                new = parts[:]
                if i < len(parts):
                    new[i] += 1
                else:
                    new.append(1)
                out.append(Partition(new))
        return out

    def remove_box(self):
        """Partitions obtained by removing one box, in row order."""
        out = []
        parts = list(self)
        for i in range(len(parts)):
            nxt = parts[i + 1] if i + 1 < len(parts) else 0
            if parts[i] > nxt:
                new = parts[:]
                new[i] -= 1
                out.append(Partition(new))
        return out

    def is_horizontal_strip_over(self, mu):
        """True when ``self / mu`` has at most one box in each column."""
        mu = Partition(mu)
        if not self.contains(mu):
            return False
        return all(mu.part(i) >= self.part(i + 1) for i in range(1, len(self) + 1))

    def frobenius(self):
        d = self.d
        lc = self.conjugate()
        return FrobeniusCoords(
            tuple(self.part(i) - i for i in range(1, d + 1)),
            tuple(lc.part(i) - i for i in range(1, d + 1)),
        )

    def a_indices(self, n):
        return a_mu_indices(self, n)


@lru_cache(maxsize=None)
def _conjugate(parts):
    if not parts:
        return Partition(())
    return Partition(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


EMPTY = Partition(())


@dataclass(frozen=True)
class FrobeniusCoords:
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ValueError("Frobenius coordinates must have equal lengths")
        for seq in (self.alpha, self.beta):
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)) or any(v < 0 for v in seq):
                raise ValueError("Frobenius coordinates must strictly decrease and be nonnegative")

    def to_partition(self):
        d = len(self.alpha)
        if d == 0:
            return EMPTY
        rows = [self.alpha[i] + i + 1 for i in range(d)]
        cols = [self.beta[j] + j + 1 for j in range(d)]
        # Rows below the diagonal block are read off the column lengths.
        lower = []
        for i in range(d + 1, cols[0] + 1):
            lower.append(sum(1 for c in cols if c >= i))
        return Partition(rows + lower)

    def __str__(self):
        return "(" + ",".join(map(str, self.alpha)) + "|" + ",".join(map(str, self.beta)) + ")"


def hook_partition(alpha, beta):
    """The hook (alpha|beta) = (alpha+1, 1^beta)."""
    return Partition((alpha + 1,) + (1,) * beta)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self):
        """Cells (row, col) in row-major order."""
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]

    def __contains__(self, cell):
        i, j = cell
        return self.inner.part(i) < j <= self.outer.part(i)

    @property
    def size(self):
        return self.outer.size - self.inner.size

    def conjugate(self):
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    def column_lengths(self):
        oc, ic = self.outer.conjugate(), self.inner.conjugate()
        return [oc.part(j) - ic.part(j) for j in range(1, len(oc) + 1)]

    def __str__(self):
        if not self.inner:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def skew(outer, inner=()):
    return SkewShape(Partition(outer), Partition(inner))


def as_skew(theta):
    if isinstance(theta, SkewShape):
        return theta
    return SkewShape(Partition(theta), EMPTY)


def parse_partition(text):
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return EMPTY
    return Partition(int(p) for p in text.strip("()").split(","))


def parse_skew(text):
    if "/" in text:
        outer, inner = text.split("/", 1)
        return SkewShape(parse_partition(outer), parse_partition(inner))
    return SkewShape(parse_partition(text), EMPTY)


def a_mu_indices(mu, n):
    """Indices i - mu_i for i = 1..n, so that a_mu = (a_{1-mu_1}, ..., a_{n-mu_n})."""
    mu = Partition(mu)
    return [i - mu.part(i) for i in range(1, n + 1)]


# -- enumeration of partitions ------------------------------------------

@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """Partitions of n in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_up_to(n):
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def partitions_between(mu, nu):
    """All rho with mu ⊆ rho ⊆ nu, graded by size."""
    mu, nu = Partition(mu), Partition(nu)
    if not nu.contains(mu):
        return []
    out = []

    def rec(i, prev, acc):
        if i > len(nu):
            out.append(Partition(acc))
            return
        hi = min(nu.part(i), prev)
        for p in range(mu.part(i), hi + 1):
            rec(i + 1, p, acc + [p])

    rec(1, nu.part(1), [])
    out.sort(key=lambda p: (p.size, tuple(-v for v in p)))
    return out


def partitions_containing(mu, max_size, max_length=None):
    """All lambda ⊇ mu with |lambda| <= max_size (optionally bounded length)."""
    mu = Partition(mu)
    out = []
    for k in range(mu.size, max_size + 1):
        for lam in partitions_of(k):
            if lam.contains(mu) and (max_length is None or len(lam) <= max_length):
                out.append(lam)
    return out


# -- growth chains --------------------------------------------------------

@dataclass(frozen=True)
class GrowthChain:
    chain: tuple

    def __post_init__(self):
        chain = tuple(Partition(p) for p in self.chain)
        object.__setattr__(self, "chain", chain)
        for p, q in zip(chain, chain[1:]):
            if q.size != p.size + 1 or not q.contains(p):
                raise ValueError("consecutive diagrams must differ by one box")

    @property
    def yamanouchi(self):
        rows = []
        for p, q in zip(self.chain, self.chain[1:]):
            rows.append(next(i for i in range(1, len(q) + 1) if q.part(i) != p.part(i)))
        return tuple(rows)

    def __len__(self):
        return len(self.chain) - 1

    @classmethod
    def from_yamanouchi(cls, rows, start=EMPTY):
        chain = [Partition(start)]
        for r in rows:
            parts = list(chain[-1]) + [0]
            parts[r - 1] += 1
            chain.append(Partition(parts))
        return cls(tuple(chain))


def growth_chains(mu, nu):
    """All saturated chains mu -> ... -> nu, in lexicographic order of row sequences."""
    mu, nu = Partition(mu), Partition(nu)
    if not nu.contains(mu):
        return []
    out = []

    def rec(path):
        cur = path[-1]
        if cur == nu:
            out.append(GrowthChain(tuple(path)))
            return
        for nxt in cur.add_box():
            if nu.contains(nxt):
                rec(path + [nxt])

    rec([mu])
    return out


# -- dimensions and hook products ----------------------------------------

def dim_enumerate(theta):
    """Number of standard tableaux of a skew shape, by counting box-adding chains."""
    theta = as_skew(theta)
    return _count_chains(theta.inner, theta.outer)


@lru_cache(maxsize=None)
def _count_chains(mu, nu):
    if mu == nu:
        return 1
    return sum(_count_chains(m, nu) for m in mu.add_box() if nu.contains(m))


def dim_determinant(theta):
    """|theta|! det[1/(lambda_i - mu_j - i + j)!]."""
    theta = as_skew(theta)
    lam, mu = theta.outer, theta.inner
    ell = len(lam)
    if ell == 0:
        return 1
    mat = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            k = lam.part(i) - mu.part(j) - i + j
            row.append(Fraction(1, factorial(k)) if k >= 0 else Fraction(0))
        mat.append(row)
    det = fraction_det(mat)
    val = det * factorial(theta.size)
    if val.denominator != 1:
        raise ArithmeticError("non-integral dimension")
    return int(val)


def fraction_det(mat):
    """Determinant of a square matrix of Fractions by Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def dim_and_hook(theta):
    """(dim theta, H_theta) with H_theta = |theta|!/dim theta."""
    theta = as_skew(theta)
    dim = dim_determinant(theta)
    if theta.size <= 12 and dim != dim_enumerate(theta):
        raise ArithmeticError("dimension methods disagree")
    if dim == 0:
        return 0, None
    h = Fraction(factorial(theta.size), dim)
    return dim, (h.numerator if h.denominator == 1 else h)


def hook_product(theta):
    return dim_and_hook(theta)[1]


# -- classical Littlewood-Richardson coefficients ---------------------------

@lru_cache(maxsize=None)
def lr_coefficient(alpha, beta, gamma):
    """c^gamma_{alpha beta} counted by lattice-word skew tableaux of shape gamma/alpha, content beta."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if gamma.size != alpha.size + beta.size or not gamma.contains(alpha) or not gamma.contains(beta):
        return 0
    # Fill in reading order: rows top to bottom, each right to left.
    order = [(i, j) for i in range(1, len(gamma) + 1)
             for j in range(gamma.part(i), alpha.part(i), -1)]
    filling = {}
    counts = [0] * (len(beta) + 1)
    total = 0

    def rec(k):
        nonlocal total
        if k == len(order):
            total += 1
            return
        i, j = order[k]
        hi = len(beta)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        up = filling.get((i - 1, j))
        lo = up + 1 if up is not None else 1
        for v in range(lo, hi + 1):
            if counts[v] >= beta.part(v):
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            rec(k + 1)
            del filling[(i, j)]
            counts[v] -= 1

    rec(0)
    return total


@lru_cache(maxsize=None)
def schur_product(alpha, beta):
    """Classical s_alpha * s_beta as a dict gamma -> c^gamma_{alpha beta}."""
    alpha, beta = Partition(alpha), Partition(beta)
    out = {}
    for gamma in partitions_containing(alpha, alpha.size + beta.size):
        if gamma.size == alpha.size + beta.size:
            c = lr_coefficient(alpha, beta, gamma)
            if c:
                out[gamma] = c
    return out


# -- characters ---------------------------------------------------------------

@lru_cache(maxsize=None)
def mn_character(lam, mu):
    """Symmetric group character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return 0
    if not mu:
        return 1
    k = mu[0]
    rest = Partition(mu[1:])
    ell = len(lam)
    beta = [lam.part(i) + ell - i for i in range(1, ell + 1)]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in bset:
            continue
        sign = (-1) ** sum(1 for v in beta if c < v < b)
        newb = sorted((c if v == b else v for v in beta), reverse=True)
        newlam = Partition(v - (ell - i) for i, v in enumerate(newb, 1))
        total += sign * mn_character(newlam, rest)
    return total


def z_lambda(mu):
    mu = Partition(mu)
    out = 1
    for k in set(mu):
        m = mu.count(k)
        out *= k ** m * factorial(m)
    return out


def n_boxes_below(lam, mu, d=None):
    """Boxes of lam/mu in rows d+1, d+2, ...."""
    lam, mu = Partition(lam), Partition(mu)
    if d is None:
        d = mu.d
    return sum(lam.part(i) - mu.part(i) for i in range(d + 1, len(lam) + 1))


def m_boxes_above(lam, mu, d=None):
    """Boxes of lam/mu in rows 1..d."""
    lam, mu = Partition(lam), Partition(mu)
    if d is None:
        d = mu.d
    return sum(lam.part(i) - mu.part(i) for i in range(1, d + 1))
