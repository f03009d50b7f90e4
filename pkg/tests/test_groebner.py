import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gradedeg import Ideal, PolyRing, buchberger, colon, normal_form, saturate, artinian_length
from gradedeg.groebner import (
    DeskScaleExceeded,
    NotArtinianError,
    ideal_contains,
    ideal_equal,
    ideal_power,
    initial_ideal_generators,
    intersect,
    socle_degree,
)

from oracles import count_standard, hilbert_function_by_rank, sympy_groebner, to_sympy
from strategies import R3, forms, polys


def _normalized(exprs, syms, order):
    out = set()
    for e in exprs:
        e = sympy.expand(e)
        out.add(sympy.expand(e / sympy.LC(e, *syms, order=order)))
    return out


def test_twisted_cubic_basis():
    R = PolyRing.from_names("x,y,z,w")
    I = Ideal(R, ["x*z - y^2", "y*w - z^2", "x*w - y*z"])
    gb = buchberger(I)
    assert sorted(str(p) for p in gb) == sorted(["y^2 - x*z", "y*z - x*w", "z^2 - y*w"])


def test_normal_form_and_membership():
    R = PolyRing.from_names("x,y")
    I = Ideal(R, ["x^2 - y", "x*y - 1"])
    gb = I.groebner("lex")
    assert gb.contains(R.parse("y^2 - x"))
    assert not gb.contains(R.parse("x + y"))
    nf = normal_form(R.parse("x^3"), gb)
    assert gb.contains(R.parse("x^3") - nf)


def test_unit_ideal():
    R = PolyRing.from_names("x,y")
    I = Ideal(R, ["x", "x + 1"])
    assert I.groebner().is_unit()


@settings(max_examples=50, deadline=None)
@given(st.lists(polys(R3, max_terms=3, top=2), min_size=1, max_size=3),
       st.sampled_from(["grevlex", "lex"]))
def test_reduced_basis_matches_sympy(gens, order):
    gens = [g for g in gens if not g.is_zero()]
    assume(gens)
    syms = sympy.symbols("x y z")
    ours = [to_sympy(p, syms) for p in Ideal(R3, gens).groebner(order)]
    G, _ = sympy_groebner(gens, "x y z", order)
    assert _normalized(ours, syms, order) == _normalized(G.exprs, syms, order)


@settings(max_examples=50, deadline=None)
@given(st.lists(polys(R3, max_terms=3, top=2), min_size=1, max_size=3),
       st.lists(polys(R3, max_terms=3, top=2), min_size=1, max_size=2))
def test_membership_of_combinations(gens, mult):
    gens = [g for g in gens if not g.is_zero()]
    assume(gens)
    I = Ideal(R3, gens)
    combo = sum((a * g for a, g in zip(mult, gens)), R3.zero())
    assert I.contains(combo)


def test_intersection_and_colon():
    R = PolyRing.from_names("x,y")
    I = Ideal(R, ["x^2*y", "x*y^2"])
    sat, k = saturate(I, Ideal(R, ["x", "y"]))
    assert ideal_equal(sat, Ideal(R, ["x*y"])) and k == 1
    J = Ideal(R, ["x + y"])
    K = intersect(Ideal(R, ["x"]), J)
    assert ideal_equal(K, Ideal(R, ["x^2 + x*y"]))
    C = colon(Ideal(R, ["x^2", "y^2"]), Ideal(R, ["x*y"]))
    assert ideal_equal(C, Ideal(R, ["x", "y"]))


@settings(max_examples=50, deadline=None)
@given(st.lists(forms(R3, 2, max_terms=3), min_size=2, max_size=3), forms(R3, 1, max_terms=2))
def test_colon_defining_property(gens, f):
    gens = [g for g in gens if not g.is_zero()]
    assume(gens and not f.is_zero())
    I = Ideal(R3, gens)
    C = colon(I, Ideal(R3, [f]))
    for g in C.gens:
        assert I.contains(g * f)
    for g in gens:
        assert C.contains(g)


def test_colength_and_socle():
    R = PolyRing.from_names("x,y,z")
    I = Ideal(R, ["x^2", "y^2", "z^2"])
    sc = artinian_length(I)
    assert sc.per_degree == (1, 3, 3, 1) and sc.total == 8
    assert socle_degree(I) == 3
    assert not artinian_length(Ideal(R, ["x", "y"])).finite
    with pytest.raises(NotArtinianError):
        socle_degree(Ideal(R, ["x"]))


@settings(max_examples=50, deadline=None)
@given(st.lists(forms(R3, 2, max_terms=3), min_size=1, max_size=5))
def test_colength_matches_rank_oracle(gens):
    # the cubes of the variables make every example Artinian
    gens = [g for g in gens if not g.is_zero()] + [R3(v + "^3") for v in R3.names]
    I = Ideal(R3, gens)
    sc = artinian_length(I)
    assert sc.finite
    for d, count in enumerate(sc.per_degree):
        assert count == hilbert_function_by_rank(gens, 3, d)
    assert hilbert_function_by_rank(gens, 3, len(sc.per_degree)) == 0


def test_monomial_colength_matches_enumeration():
    R = PolyRing.from_names("x,y,z")
    gens = [(3, 0, 0), (0, 2, 0), (0, 0, 4), (1, 1, 1)]
    I = Ideal(R, [R.monomial(g) for g in gens])
    assert artinian_length(I).total == count_standard(gens, 3, 4)


def test_powers():
    R = PolyRing.from_names("x,y")
    I = Ideal(R, ["x^2", "x*y + y^2"])
    P3 = ideal_power(I, 3)
    naive = Ideal(R, [a * b * c for a in I.gens for b in I.gens for c in I.gens])
    assert ideal_equal(P3, naive)
    assert ideal_equal(ideal_power(I, 0), Ideal(R, ["1"]))


def test_initial_ideal_and_containment():
    R = PolyRing.from_names("x,y")
    I = Ideal(R, ["x^2 - y^2", "x*y"])
    assert sorted(initial_ideal_generators(I)) == sorted([(2, 0), (1, 1), (0, 3)])
    assert ideal_contains(I, Ideal(R, ["x^3"]))


def test_resource_cap():
    R = PolyRing.from_names("x,y,z")
    I = Ideal(R, ["x^5 - y*z^4", "y^5 - x^3*z^2", "z^5 - x*y^4"])
    with pytest.raises(DeskScaleExceeded):
        buchberger(I, max_basis=3)
