"""Deterministic tableau iterators.

Every iterator fills the cells of a skew shape in row-major order and tries
candidate entries in increasing order, so fillings come out in lexicographic
order of their row-major reading.  A filling is a dict ``{(row, col): entry}``.
Supertableau entries are pairs ``(i, primed)``.
"""

from __future__ import annotations

from .errors import ColumnBoundViolated
from .shapes import EMPTY, GrowthChain, Partition, SkewShape, as_skew

FAMILIES = (
    "reverse",
    "semistandard",
    "A",
    "Aprime",
    "hook",
    "dual_hook",
    "flagged_plus",
    "flagged_minus",
)


def fill(cells, candidates, ok_left, ok_up):
    """Backtracking filler.

    ``candidates(cell)`` lists allowed entries; ``ok_left(cell, left, v)`` and
    ``ok_up(cell, up, v)`` test the entry against the already placed neighbour
    to the left and above (only called when that neighbour is in the shape).
    """
    cells = list(cells)
    cellset = set(cells)
    cand = [list(candidates(c)) for c in cells]
    T = {}

    def rec(k):
        if k == len(cells):
            yield dict(T)
            return
        i, j = cells[k]
        left = (i, j - 1) if (i, j - 1) in cellset else None
        up = (i - 1, j) if (i - 1, j) in cellset else None
        for v in cand[k]:
            if left is not None and not ok_left((i, j), T[left], v):
                continue
            if up is not None and not ok_up((i, j), T[up], v):
                continue
            T[(i, j)] = v
            yield from rec(k + 1)
        T.pop((i, j), None)

    yield from rec(0)


def reverse_tableaux(theta, n):
    """Rows weakly decrease, columns strictly decrease, entries in 1..n."""
    theta = as_skew(theta)
    return fill(
        theta.cells(),
        lambda c: range(1, n + 1),
        lambda c, left, v: v <= left,
        lambda c, up, v: v < up,
    )


def semistandard_tableaux(theta, n):
    theta = as_skew(theta)
    return fill(
        theta.cells(),
        lambda c: range(1, n + 1),
        lambda c, left, v: v >= left,
        lambda c, up, v: v > up,
    )


def _super_alphabet(nx, ny, ordering):
    """Symbols sorted in the given ordering, with their ordinal ranks."""
    symbols = []
    for i in range(1, max(nx, ny) + 1):
        # A: 1' < 1 < 2' < 2 ...;  Aprime: 1 < 1' < 2 < 2' ...
        if ordering == "A":
            pair = [((i, True), 2 * i - 1), ((i, False), 2 * i)]
        elif ordering == "Aprime":
            pair = [((i, False), 2 * i - 1), ((i, True), 2 * i)]
        else:
            raise ValueError(f"unknown ordering {ordering!r}")
        for sym, rank in pair:
            if (sym[1] and i <= ny) or (not sym[1] and i <= nx):
                symbols.append((sym, rank))
    return symbols


def super_tableaux(theta, nx, ny, ordering="A"):
    """A- or A'-supertableaux: weakly increasing rows and columns in the
    chosen ordering, at most one i' per row and at most one i per column.

    Unprimed symbols i stand for x_i (i <= nx), primed ones for y_i (i <= ny).
    """
    theta = as_skew(theta)
    alphabet = _super_alphabet(nx, ny, ordering)
    rank = dict(alphabet)
    syms = [s for s, _ in alphabet]

    def ok_left(c, left, v):
        if rank[v] < rank[left]:
            return False
        return not (v == left and v[1])

    def ok_up(c, up, v):
        if rank[v] < rank[up]:
            return False
        return not (v == up and not v[1])

    return fill(theta.cells(), lambda c: syms, ok_left, ok_up)


def _same_diagonal(lam, mu):
    return lam.d == mu.d and lam.contains(mu)


def hook_tableaux(lam, mu):
    """Fillings defining the flagged function phi_{lam/mu}.

    Top d rows: row i takes values in {i-mu_i, ..., 0}, weakly increasing
    along rows and strictly increasing down columns.  First d columns: column
    j takes values in {1, ..., mu'_j - j + 1}, weakly decreasing down columns
    and strictly decreasing along rows.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not _same_diagonal(lam, mu):
        return iter(())
    d = mu.d
    mc = mu.conjugate()

    def cand(c):
        i, j = c
        if i <= d:
            return range(i - mu.part(i), 1)
        return range(1, mc.part(j) - j + 2)

    def ok_left(c, left, v):
        return v >= left if c[0] <= d else v < left

    def ok_up(c, up, v):
        return v > up if c[0] <= d else v <= up

    return fill(SkewShape(lam, mu).cells(), cand, ok_left, ok_up)


def dual_hook_tableaux(lam, mu):
    """Fillings defining the flagged function psi_{lam/mu}.

    Top d rows: row i takes values in {i-lam_i+1, ..., 0}, strictly
    decreasing along rows, weakly decreasing down columns.  First d
    columns: column j takes values in {1, ..., lam'_j - j}, strictly
    increasing down columns, weakly increasing along rows.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not _same_diagonal(lam, mu):
        return iter(())
    d = mu.d
    lc = lam.conjugate()

    def cand(c):
        i, j = c
        if i <= d:
            return range(i - lam.part(i) + 1, 1)
        return range(1, lc.part(j) - j + 1)

    def ok_left(c, left, v):
        return v < left if c[0] <= d else v >= left

    def ok_up(c, up, v):
        return v <= up if c[0] <= d else v > up

    return fill(SkewShape(lam, mu).cells(), cand, ok_left, ok_up)


def flagged_plus_tableaux(lam, mu):
    """Column-flagged fillings of the top-d-rows part of lam/mu.

    Column j takes values in {-j+mu'_j+2, ..., 0}; rows weakly increase and
    columns strictly increase.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not _same_diagonal(lam, mu):
        return iter(())
    d = mu.d
    mc = mu.conjugate()
    cells = [c for c in SkewShape(lam, mu).cells() if c[0] <= d]
    return fill(
        cells,
        lambda c: range(-c[1] + mc.part(c[1]) + 2, 1),
        lambda c, left, v: v >= left,
        lambda c, up, v: v > up,
    )


def flagged_minus_tableaux(lam, mu):
    """Row-flagged fillings of the part of lam/mu below row d.

    Row i takes values in {1, ..., i - lam_i}; rows weakly increase and
    columns strictly increase.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not _same_diagonal(lam, mu):
        return iter(())
    d = mu.d
    cells = [c for c in SkewShape(lam, mu).cells() if c[0] > d]
    return fill(
        cells,
        lambda c: range(1, c[0] - lam.part(c[0]) + 1),
        lambda c, left, v: v >= left,
        lambda c, up, v: v > up,
    )


def iter_tableaux(shape, family, n=None, ny=None, ordering=None):
    """Dispatch to one of the tableau families listed in :data:`FAMILIES`.

    ``n`` bounds the entries of reverse/semistandard tableaux and the unprimed
    letters of supertableaux (``ny`` the primed ones, defaulting to ``n``).
    The flagged families take their flags from the shape itself.
    """
    shape = as_skew(shape)
    if family == "reverse":
        return reverse_tableaux(shape, n)
    if family == "semistandard":
        return semistandard_tableaux(shape, n)
    if family in ("A", "Aprime"):
        return super_tableaux(shape, n, n if ny is None else ny, family)
    if family == "hook":
        return hook_tableaux(shape.outer, shape.inner)
    if family == "dual_hook":
        return dual_hook_tableaux(shape.outer, shape.inner)
    if family == "flagged_plus":
        return flagged_plus_tableaux(shape.outer, shape.inner)
    if family == "flagged_minus":
        return flagged_minus_tableaux(shape.outer, shape.inner)
    raise ValueError(f"unknown tableau family {family!r}")


# -- barred supertableaux -----------------------------------------------------

def column_order(cells):
    """Columns left to right, each read from bottom to top."""
    return sorted(cells, key=lambda c: (c[1], -c[0]))


def dual_lr_supertableaux(theta, n):
    """Supertableaux on 1, 1', ..., n, n' used by the dual LR rule.

    Primed entries sit left of / above unprimed ones.  Unprimed entries weakly
    decrease along rows and strictly decrease down columns; primed entries
    strictly increase along rows and weakly increase down columns.
    """
    theta = as_skew(theta)
    syms = [(i, True) for i in range(1, n + 1)] + [(i, False) for i in range(1, n + 1)]

    def ok_left(c, left, v):
        if left[1] and v[1]:
            return v[0] > left[0]
        if not left[1] and not v[1]:
            return v[0] <= left[0]
        return left[1]

    def ok_up(c, up, v):
        if up[1] and v[1]:
            return v[0] >= up[0]
        if not up[1] and not v[1]:
            return v[0] < up[0]
        return up[1]

    return fill(theta.cells(), lambda c: syms, ok_left, ok_up)


def iter_barred_supertableaux(theta, chain, n):
    """Yield ``(T, barred, rho)`` for every barred supertableau compatible with ``chain``.

    ``barred`` is the tuple of barred cells alpha_1 < ... < alpha_l (column
    order); ``rho`` maps each unbarred unprimed cell to the diagram rho^(i)
    with alpha_i < cell < alpha_{i+1}.
    """
    theta = as_skew(theta)
    if not isinstance(chain, GrowthChain):
        chain = GrowthChain(tuple(chain))
    if chain.chain and chain.chain[0] != EMPTY:
        raise ValueError("growth chain must start at the empty diagram")
    cols = theta.column_lengths()
    if any(c > n for c in cols):
        raise ColumnBoundViolated(f"a column of {theta} has more than {n} boxes")
    rows = chain.yamanouchi
    l = len(rows)
    if l > theta.size:
        return
    for T in dual_lr_supertableaux(theta, n):
        unprimed = [c for c in column_order(T) if not T[c][1]]
        for picks in _increasing_matches([T[c][0] for c in unprimed], rows):
            barred = tuple(unprimed[k] for k in picks)
            rho = {}
            seg = 0
            pickset = set(picks)
            for k, c in enumerate(unprimed):
                if k in pickset:
                    seg += 1
                else:
                    rho[c] = chain.chain[seg]
            yield T, barred, rho


def _increasing_matches(word, target):
    """Index tuples k_1 < ... < k_l with word[k_i] == target[i]."""
    out = []

    def rec(start, t, acc):
        if t == len(target):
            out.append(tuple(acc))
            return
        for k in range(start, len(word) - (len(target) - t) + 1):
            if word[k] == target[t]:
                rec(k + 1, t + 1, acc + [k])

    rec(0, 0, [])
    return out


def standard_tableaux(theta):
    """Standard fillings of a skew shape (entries 1..|theta|)."""
    theta = as_skew(theta)
    size = theta.size
    out = []
    T = {}

    def rec(cur, k):
        if k > size:
            out.append(dict(T))
            return
        for nxt in cur.add_box():
            if theta.outer.contains(nxt):
                i = next(r for r in range(1, len(nxt) + 1) if nxt.part(r) != cur.part(r))
                T[(i, nxt.part(i))] = k
                rec(nxt, k + 1)
                del T[(i, nxt.part(i))]

    rec(theta.inner, 1)
    return out
