"""The flagged polynomials phi_{lam/mu}(a) and psi_{lam/mu}(a).

phi gives the classical Schur coefficients of a dual Schur series and psi
the dual Schur coefficients of a classical Schur function.  Both vanish
unless lam contains mu and the two diagrams have the same number of
diagonal boxes.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import ONE, ZERO, a, det, poly_sum
from .shapes import Partition, m_boxes_above, n_boxes_below
from .tableaux import (
    dual_hook_tableaux,
    flagged_minus_tableaux,
    flagged_plus_tableaux,
    hook_tableaux,
)


def _tableau_sum(tableaux):
    total = []
    for T in tableaux:
        term = ONE
        for v in T.values():
            term = term * a(v)
        total.append(term)
    return poly_sum(total)


def compatible(lam, mu):
    lam, mu = Partition(lam), Partition(mu)
    return lam.contains(mu) and lam.d == mu.d


@lru_cache(maxsize=None)
def phi(lam, mu):
    """Hook tableau sum for lam/mu."""
    lam, mu = Partition(lam), Partition(mu)
    if not compatible(lam, mu):
        return ZERO
    return _tableau_sum(hook_tableaux(lam, mu))


@lru_cache(maxsize=None)
def psi(lam, mu):
    """Dual hook tableau sum for lam/mu."""
    lam, mu = Partition(lam), Partition(mu)
    if not compatible(lam, mu):
        return ZERO
    return _tableau_sum(dual_hook_tableaux(lam, mu))


def phi_plus(lam, mu):
    """Column-flagged sum over the top-d-rows part of lam/mu."""
    return _tableau_sum(flagged_plus_tableaux(lam, mu))


def psi_minus(lam, mu):
    """Row-flagged sum over the part of lam/mu below row d."""
    return _tableau_sum(flagged_minus_tableaux(lam, mu))


def phi_factored(lam, mu):
    """phi via the column-flagged top part and the conjugate top part in a'."""
    lam, mu = Partition(lam), Partition(mu)
    if not compatible(lam, mu):
        return ZERO
    sign = (-1) ** n_boxes_below(lam, mu)
    lower = phi_plus(lam.conjugate(), mu.conjugate()).dualize()
    return (phi_plus(lam, mu) * lower).scale(sign)


def psi_factored(lam, mu):
    """psi via the row-flagged lower part and the conjugate lower part in a'."""
    lam, mu = Partition(lam), Partition(mu)
    if not compatible(lam, mu):
        return ZERO
    sign = (-1) ** m_boxes_above(lam, mu)
    upper = psi_minus(lam.conjugate(), mu.conjugate()).dualize()
    return (psi_minus(lam, mu) * upper).scale(sign)


def complete(k, indices):
    """h_k in the variables a_i, i in indices."""
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    idx = list(indices)
    if not idx:
        return ZERO
    return _complete(k, tuple(idx))


@lru_cache(maxsize=None)
def _complete(k, idx):
    if k == 0:
        return ONE
    if not idx:
        return ZERO
    # h_k(v_1..v_m) = h_k(v_1..v_{m-1}) + v_m h_{k-1}(v_1..v_m)
    return _complete(k, idx[:-1]) + a(idx[-1]) * _complete(k - 1, idx)


def elementary(k, indices):
    """e_k in the variables a_i, i in indices."""
    if k < 0:
        return ZERO
    idx = tuple(indices)
    return _elementary(k, idx)


@lru_cache(maxsize=None)
def _elementary(k, idx):
    if k == 0:
        return ONE
    if len(idx) < k:
        return ZERO
    return _elementary(k, idx[:-1]) + a(idx[-1]) * _elementary(k - 1, idx[:-1])


def phi_determinant(lam, mu):
    """phi as the product of a complete-function and an elementary-function determinant."""
    lam, mu = Partition(lam), Partition(mu)
    if not compatible(lam, mu):
        return ZERO
    d = mu.d
    top = det([
        [complete(lam.part(i) - mu.part(j) - i + j, range(j - mu.part(j), 1)) for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ])
    ell = max(len(lam), d)
    bottom = det([
        [elementary(lam.part(i) - mu.part(j) - i + j, range(1, j - mu.part(j)))
         for j in range(d + 1, ell + 1)]
        for i in range(d + 1, ell + 1)
    ])
    return top * bottom


def psi_determinant(lam, mu):
    lam, mu = Partition(lam), Partition(mu)
    if not compatible(lam, mu):
        return ZERO
    d = mu.d
    top = det([
        [elementary(lam.part(i) - mu.part(j) - i + j, range(i - lam.part(i) + 1, 1))
         for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ])
    ell = max(len(lam), d)
    bottom = det([
        [complete(lam.part(i) - mu.part(j) - i + j, range(1, i - lam.part(i) + 1))
         for j in range(d + 1, ell + 1)]
        for i in range(d + 1, ell + 1)
    ])
    return top * bottom


def phi_signed(lam, mu):
    """(-1)^{n(lam/mu)} phi_{lam/mu}: classical coefficient of s_lam in the dual series of mu."""
    return phi(lam, mu).scale((-1) ** n_boxes_below(lam, mu)) if compatible(lam, mu) else ZERO


def psi_signed(lam, mu):
    """(-1)^{m(lam/mu)} psi_{lam/mu}: dual coefficient of hat s_lam in s_mu."""
    return psi(lam, mu).scale((-1) ** m_boxes_above(lam, mu)) if compatible(lam, mu) else ZERO
