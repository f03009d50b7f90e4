"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from gradedeg import PolyRing, Polynomial

R2 = PolyRing.from_names("x,y")
R3 = PolyRing.from_names("x,y,z")

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def exps(n, top=3):
    return st.tuples(*[st.integers(0, top)] * n)


def polys(ring, max_terms=4, top=3):
    return st.dictionaries(exps(ring.nvars, top), coeffs, max_size=max_terms).map(
        lambda d: Polynomial(ring, d))


def forms(ring, deg, max_terms=4):
    """Homogeneous polynomials of degree ``deg`` (possibly zero)."""
    def build(items):
        return Polynomial(ring, dict(items))

    from gradedeg.polyring import monomials_of_degree

    mons = monomials_of_degree(ring.weights, deg)
    return st.lists(st.tuples(st.sampled_from(mons), st.integers(-3, 3).map(Fraction)),
                    max_size=max_terms).map(build)


def monomial_gens(n, top=4, min_size=1, max_size=4):
    return st.lists(exps(n, top), min_size=min_size, max_size=max_size).filter(
        lambda gs: all(any(g) for g in gs))


def m_primary_monomial_gens(n, top=4, extra=3):
    """Pure powers of every variable plus a few random monomials."""
    pure = st.tuples(*[st.integers(1, top)] * n).map(
        lambda ks: [tuple(k if j == i else 0 for j in range(n)) for i, k in enumerate(ks)])
    more = st.lists(exps(n, top), max_size=extra).map(lambda gs: [g for g in gs if any(g)])
    return st.tuples(pure, more).map(lambda p: p[0] + p[1])
