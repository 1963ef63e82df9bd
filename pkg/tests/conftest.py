from hypothesis import strategies as st

from cornerhook.polyring import MPoly, Q, T, X, Z

VARS = [Q, T, X(1), X(2), Z(1)]


@st.composite
def polys(draw, max_terms=4, max_exp=2):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = {v: draw(st.integers(0, max_exp)) for v in VARS}
        coef = draw(st.integers(-3, 3))
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        terms[mono] = terms.get(mono, 0) + coef
    return MPoly(terms)


@st.composite
def partitions(draw, max_rows=8, max_cols=8):
    n = draw(st.integers(0, max_rows))
    parts = draw(st.lists(st.integers(1, max_cols), min_size=n, max_size=n))
    return tuple(sorted(parts, reverse=True))
