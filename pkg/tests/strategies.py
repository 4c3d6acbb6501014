from hypothesis import strategies as st

from doublesym.algebra import ONE, a, poly_sum, x
from doublesym.shapes import Partition

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def monomials(draw, max_index=3, xs=0):
    m = ONE
    for _ in range(draw(st.integers(0, 3))):
        m = m * a(draw(st.integers(-max_index, max_index)))
    for _ in range(draw(st.integers(0, 2)) if xs else 0):
        m = m * x(draw(st.integers(1, xs)))
    return m


@st.composite
def polys(draw, max_terms=4, xs=0):
    n = draw(st.integers(0, max_terms))
    return poly_sum(draw(monomials(xs=xs)).scale(draw(coeffs)) for _ in range(n))


@st.composite
def partitions(draw, max_size=5, max_length=None):
    size = draw(st.integers(0, max_size))
    parts = []
    left = size
    while left:
        top = min(left, parts[-1]) if parts else left
        p = draw(st.integers(1, top))
        parts.append(p)
        left -= p
    lam = Partition(parts)
    if max_length is not None and len(lam) > max_length:
        lam = Partition(lam[:max_length])
    return lam

