import itertools
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gradedeg import Ideal, MonomialIdeal, PolyRing, hilbert_series, samuel_fit
from gradedeg.groebner import artinian_length
from gradedeg.hilbert import (
    HilbertSeries,
    WindowDisagreement,
    coefficients_from_series,
    degree_report,
    hilbert_series_monomial,
    irreducible_decomposition,
    tracking_number,
    tracking_number_monomial,
    veronese_series,
)

from oracles import colength_monomial_power, hilbert_function_by_rank, monomials
from strategies import R3, forms, m_primary_monomial_gens, monomial_gens


def _count_degree(gens, nvars, deg):
    return sum(1 for e in monomials(nvars, deg) if not any(all(a <= b for a, b in zip(g, e)) for g in gens))


def test_series_basics():
    R = PolyRing.from_names("x,y")
    H = hilbert_series(Ideal(R, ["x^2", "y^2"]))
    assert H.numerator == (1, 2, 1) and H.dim == 0 and str(H) == "1 + 2t + t^2"
    H = hilbert_series(Ideal(PolyRing.from_names("x,y,z,w"), ["x^3 - y*z*w", "x^2*y - z*w^2"]))
    assert H == HilbertSeries((1, 2, 3, 2, 1), 2)
    assert str(H) == "(1 + 2t + 3t^2 + 2t^3 + t^4)/(1-t)^2"
    assert H.a_invariant == 2


def test_series_of_zero_and_unit_ideals():
    R = PolyRing.from_names("x,y,z")
    assert hilbert_series(Ideal(R, [])) == HilbertSeries((1,), 3)
    assert hilbert_series(Ideal(R, ["1"])).is_zero()


def test_weighted_rings_rejected():
    R = PolyRing.from_names("x,y", weights=(1, 2))
    with pytest.raises(ValueError):
        hilbert_series(Ideal(R, ["x^2 - y"]))


def test_veronese():
    H = veronese_series(3, 2)
    assert H == HilbertSeries((1, 3), 3)
    e = coefficients_from_series(H)
    assert (e[0], e[1]) == (4, 3)


@settings(max_examples=60, deadline=None)
@given(monomial_gens(3, top=3))
def test_monomial_series_matches_enumeration(gens):
    M = MonomialIdeal(R3, gens)
    H = hilbert_series_monomial(M)
    for d in range(8):
        assert H.coefficient(d) == _count_degree(M.gens, 3, d)


@settings(max_examples=50, deadline=None)
@given(st.lists(forms(R3, 2, max_terms=3), min_size=1, max_size=3),
       st.sampled_from(["grevlex", "lex", "deglex"]))
def test_macaulay_same_hilbert_function(gens, order):
    """R/I and R/in(I) share their Hilbert function, degree by degree."""
    gens = [g for g in gens if not g.is_zero()]
    assume(gens)
    I = Ideal(R3, gens)
    H = hilbert_series(I, order)
    for d in range(5):
        assert H.coefficient(d) == hilbert_function_by_rank(gens, 3, d)


@settings(max_examples=60, deadline=None)
@given(monomial_gens(3, top=3))
def test_degree_inequalities(gens):
    M = MonomialIdeal(R3, gens)
    assume(not M.is_unit())
    rep = degree_report(M)
    assert rep.adeg >= rep.gdeg >= rep.deg


def _all_monomial_ideals_2vars(top):
    pts = [(a, b) for a in range(top + 1) for b in range(top + 1) if a or b]
    seen = set()
    # staircases: choose antichains by brute force over small subsets
    for k in range(1, 5):
        for sub in itertools.combinations(pts, k):
            if any(p != q and p[0] <= q[0] and p[1] <= q[1] for p in sub for q in sub):
                continue
            seen.add(tuple(sorted(sub)))
    return sorted(seen)


def test_dimension_one_identity_exhaustive():
    """deg + h0 = adeg for every monomial ideal of k[x,y] with dim R/I = 1
    generated inside the box [0,4]^2 (up to four generators)."""
    R = PolyRing.from_names("x,y")
    checked = 0
    for gens in _all_monomial_ideals_2vars(4):
        M = MonomialIdeal(R, list(gens))
        rep = degree_report(M)
        if rep.dim == 1:
            assert rep.deg + rep.h0 == rep.adeg
            checked += 1
        elif rep.dim == 0:
            assert rep.adeg == rep.deg == rep.h0 == rep.extended_degree
    assert checked >= 50


def test_decomposition_examples():
    R = PolyRing.from_names("x,y,z")
    M = MonomialIdeal(R, [(2, 0, 0), (1, 1, 0)])
    dec = irreducible_decomposition(M)
    comps = sorted(sorted(c.gens) for c in dec.components)
    assert comps == sorted([[(1, 0, 0)], sorted([(2, 0, 0), (0, 1, 0)])])
    assert dec.multiplicities == {(0,): 1, (0, 1): 1}
    assert dec.minimal_primes() == [(0,)]
    rep = degree_report(M)
    assert (rep.deg, rep.gdeg, rep.adeg) == (1, 1, 2)


@settings(max_examples=50, deadline=None)
@given(monomial_gens(3, top=3))
def test_decomposition_intersects_back(gens):
    M = MonomialIdeal(R3, gens)
    assume(not M.is_unit())
    dec = irreducible_decomposition(M)
    acc = dec.components[0]
    for c in dec.components[1:]:
        acc = acc.intersect(c)
    assert acc == M
    for c in dec.components:
        assert c.is_pure_power_ideal()


def test_tracking_numbers():
    R = PolyRing.from_names("x,y,z,w")
    I = Ideal(R, ["x^3 - y*z*w", "x^2*y - z*w^2"])
    assert tracking_number(I).tn == 18
    R2 = PolyRing.from_names("x,y,z")
    # plane with an embedded point: torsion of dimension d - 2 does not count
    M = MonomialIdeal(R2, [(2, 0, 0), (1, 1, 0), (1, 0, 1)])
    rep = tracking_number_monomial(M)
    assert rep.torsion_dim == 0 and rep.torsion_multiplicity == 0 and rep.tn == rep.e1
    # line with an embedded point: now the point is codimension one
    M = MonomialIdeal(R2, [(1, 0, 0), (0, 1, 0)]).intersect(MonomialIdeal(R2, [(2, 0, 0), (0, 2, 0), (0, 0, 2)]))
    rep = tracking_number_monomial(M)
    assert rep.torsion_dim == 0 and rep.torsion_multiplicity == 6 and rep.tn == 0
    # plane plus a line: the line is codimension-one torsion of multiplicity 1
    M = MonomialIdeal(R2, [(1, 1, 0), (1, 0, 1)])
    rep = tracking_number_monomial(M)
    assert rep.torsion_dim == 1 and rep.torsion_multiplicity == 1
    assert rep.tn == rep.e1 + 1 == 0


def test_tracking_number_of_domain_matches_e1():
    R = PolyRing.from_names("x,y,z,w")
    I = Ideal(R, ["x*z - y^2", "y*w - z^2", "x*w - y*z"])  # twisted cubic
    rep = tracking_number(I)
    assert rep.torsion_multiplicity == 0
    assert rep.tn == coefficients_from_series(hilbert_series(I), 1)[1] == 2


def test_samuel_fit_examples():
    R = PolyRing.from_names("x,y,z")
    I = Ideal(R, ["x^2", "y^2", "z^2", "x*y - x*z", "x*z - y*z"])
    e, c = samuel_fit(I, 1, return_lengths=True)
    assert tuple(e) == (8, 4, 0, 0) and c == [36, 64, 100]
    R2 = PolyRing.from_names("x,y")
    assert tuple(samuel_fit(Ideal(R2, ["x^2", "y^2"]), 0)) == (4, 0, 0)
    assert tuple(samuel_fit(Ideal(R2, ["x^2", "x*y", "y^2"]), 0)) == (4, 1, 0)


def test_window_disagreement_detected():
    from gradedeg.hilbert import fit_filtration

    # a colength function that is not eventually polynomial of the right shape
    with pytest.raises(WindowDisagreement):
        fit_filtration(lambda n: n ** 3 + (7 if n > 3 else 0), 2, 0)


@settings(max_examples=50, deadline=None)
@given(m_primary_monomial_gens(2, top=4, extra=2))
def test_samuel_polynomial_matches_enumerated_colengths(gens):
    R = PolyRing.from_names("x,y")
    I = Ideal(R, [R.monomial(g) for g in gens])
    e = samuel_fit(I, 3)
    d = 2
    for n in (6, 7):
        poly = sum((-1) ** i * e[i] * math.comb(n + d - 1 - i, d - i) for i in range(d + 1))
        assert poly == colength_monomial_power(gens, n)
    assert artinian_length(I).total == colength_monomial_power(gens, 1)
