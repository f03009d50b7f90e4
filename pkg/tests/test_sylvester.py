import sympy
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gradedeg import Ideal, MonomialIdeal, PolyRing
from gradedeg.closure import birational_test
from gradedeg.filtration import reduction_number
from gradedeg.sylvester import (
    DegenerateParametrization,
    Parametrization,
    SchemeNotCovered,
    balanced_determinant,
    basic_sylvester,
    cm_rees_test,
    content_pair,
    elimination_chain_mu1,
    implicitize,
    mu_basis,
    perfect_power_root,
    resultant_oracle,
    secondary_elim_degree,
    secondary_elimination_degree,
)
from gradedeg.groebner import ideal_equal

from oracles import sylvester_resultant, to_sympy


def _sympy_vanishes(P, p):
    """Substitute T_i -> f_i with sympy and expand."""
    B = P.biform_ring
    syms = sympy.symbols(" ".join(B.names))
    s, t = syms[0], syms[1]
    expr = to_sympy(p, syms)
    fs = [to_sympy(f, (s, t)) for f in P.forms]
    sub = dict(zip(syms[-3:], fs))
    return sympy.expand(expr.subs(sub, simultaneous=True)) == 0


def _same_up_to_scalar(a, b):
    q = sympy.cancel(a / b)
    return q.is_number and q != 0


def _check_result(P, res):
    for sf in res.forms:
        assert _sympy_vanishes(P, sf.form)
    assert _sympy_vanishes(P, res.D) and _sympy_vanishes(P, res.F)
    assert res.D == res.F ** res.k * res.c
    assert res.D.degree() == P.n
    # independent resultant: after removing T1 it is a power of one irreducible factor, F
    R, (T1, T2, T3) = sylvester_resultant(P.forms)
    _, factors = sympy.factor_list(R, T1, T2, T3)
    factors = [(f, m) for f, m in factors if f.free_symbols != {T1} and f != T1]
    assert len(factors) == 1
    Fs = to_sympy(res.F, sympy.symbols(" ".join(res.F.ring.names)))
    assert _same_up_to_scalar(factors[0][0], Fs)
    assert res.k * res.F.degree() == P.n
    assert res.birational == (res.edeg == P.n)


def test_mu_basis_examples():
    mb = mu_basis(Parametrization.parse(["s^2", "s*t", "t^2"]))
    assert mb.degrees == (1, 1)
    mb = mu_basis(Parametrization.parse(["s^4", "t^4", "s^3*t"]))
    S = mb.columns[0][0].ring
    assert mb.degrees == (1, 3)
    assert mb.columns[0] == (S("t"), S("0"), S("-s"))
    assert mb.columns[1] == (S("0"), S("s^3"), S("-t^3"))
    mb = mu_basis(Parametrization.parse(["s^4", "s^2*t^2", "t^4"]))
    assert mb.degrees == (2, 2)
    assert mb.columns == ((S("t^2"), S("-s^2"), S("0")), (S("0"), S("t^2"), S("-s^2")))


forms_strategy = st.integers(2, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(
        st.lists(st.integers(-3, 3), min_size=n + 1, max_size=n + 1), min_size=3, max_size=3)))


def _build(data):
    n, coeffs = data
    texts = []
    for row in coeffs:
        terms = [f"({c})*s^{n - j}*t^{j}" for j, c in enumerate(row) if c]
        texts.append(" + ".join(terms) or "0")
    try:
        return Parametrization.parse(texts)
    except (DegenerateParametrization, ValueError):
        return None


@settings(max_examples=50, deadline=None)
@given(forms_strategy)
def test_random_parametrizations(data):
    P = _build(data)
    assume(P is not None)
    mb = mu_basis(P)
    assert sum(mb.degrees) == P.n and mb.degrees[0] <= mb.degrees[1]
    for col in mb.columns:
        assert sum((a * f for a, f in zip(col, P.forms)), P.ring.zero()).is_zero()
    minors = mb.minors()
    ratios = {sympy.cancel(to_sympy(m, sympy.symbols("s t")) / to_sympy(f, sympy.symbols("s t")))
              for m, f in zip(minors, P.forms)}
    assert len(ratios) == 1 and next(iter(ratios)).is_number
    if mb.mu == 0:
        # linearly dependent forms: the image is a line and no scheme applies
        with pytest.raises(SchemeNotCovered):
            implicitize(P)
        return
    # syzygies of positive degree have their content inside (s, t)
    m = Ideal(P.ring, ["s", "t"])
    for col in mb.columns:
        assert all(m.contains(g) for g in content_pair(col).gens)
    res = implicitize(P)  # n <= 4 always has mu in {1, n // 2}
    _check_result(P, res)


def test_content_pairs_and_cm_rees():
    P = Parametrization.parse(["s^4", "t^4", "s^3*t"])
    mb = mu_basis(P)
    S = P.ring
    assert ideal_equal(content_pair(mb.columns[0]), Ideal(S, ["s", "t"]))
    assert ideal_equal(content_pair(mb.columns[1]), Ideal(S, ["s^3", "t^3"]))
    assert not cm_rees_test(P)
    assert cm_rees_test(Parametrization.parse(["s^2", "s*t", "t^2"]))
    P = Parametrization.parse(["s^4", "s^2*t^2", "t^4"])
    assert cm_rees_test(P)
    assert reduction_number(Ideal(S, ["s^4", "t^4"]), Ideal(S, P.forms), 3) == 1


def test_basic_sylvester_examples():
    R = PolyRing.from_names("s,t,a,b,c,d")
    s, t = R("s"), R("t")
    assert basic_sylvester(s, t, s, t).form == R("1")
    h = basic_sylvester(R("a*s+b*t"), R("c*s+d*t"), s, t)
    assert h.form == R("a*d - b*c")
    R2 = PolyRing.from_names("s,t,x,y,z,A,B,C,D")
    f = R2("s^2*x+s*t*y+t^2*z")
    g = R2("s^3*A+s^2*t*B+s*t^2*C+t^3*D")
    b1 = basic_sylvester(f, g, R2("s^2"), R2("t"))
    expected = R2("s^2*(-y*A)+s*t*(x*C-y*B-z*A)+t^2*(x*D-z*B)")
    assert b1.form in (expected, -expected)
    with pytest.raises(ValueError):
        basic_sylvester(R("s"), R("a"), R("s^2"), R("t^2"))


def test_generic_degree_four_balanced():
    R = PolyRing.from_names("s,t,x,y,z,u,v,w")
    f, g = R("s^2*x+s*t*y+t^2*z"), R("s^2*u+s*t*v+t^2*w")
    D, forms, _ = balanced_determinant(f, g, 2)
    F = R("-z^2*u^2+y*z*u*v-x*z*v^2-y^2*u*w+2*x*z*u*w+x*y*v*w-x^2*w^2")
    assert D in (F, -F)
    h1 = R("-s*y*u - t*z*u + s*x*v + t*x*w")
    h2 = R("-s*z*u - t*z*v + s*x*w + t*y*w")
    got = {sf.form for sf in forms}
    assert got == {h1, h2} or got == {-h1, -h2} or got == {h1, -h2} or got == {-h1, h2}


def test_generic_mu1_chain():
    R = PolyRing.from_names("s,t,a,b,x,y,z,u,v,w")
    s, t = R("s"), R("t")
    f = R("a*s+b*t")
    h1 = R("-b*x*s^2-b*y*s*t-b*z*t^2+a*u*s^2+a*v*s*t+a*w*t^2")
    h2 = basic_sylvester(f, h1, s, t).form
    assert h2 == R("b^2*x*s+b^2*y*t-a*b*z*t-a*b*u*s-a*b*v*t+a^2*w*t")
    h3 = basic_sylvester(f, h2, s, t).form
    assert h3 == R("-b^3*x+a*b^2*y-a^2*b*z+a*b^2*u-a^2*b*v+a^3*w")


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_chain_family(n):
    P = Parametrization.parse([f"s^{n}", f"t^{n}", f"s^{n - 1}*t"])
    res = elimination_chain_mu1(P)
    B = res.F.ring
    F = B(f"T3^{n} - T1^{n - 1}*T2")
    assert res.F in (F, -F) and res.edeg == n and res.birational and res.k == 1
    _check_result(P, res)


def test_balanced_power():
    P = Parametrization.parse(["s^4", "s^2*t^2", "t^4"])
    res = implicitize(P)
    B = res.F.ring
    assert res.D == B("(T1*T3 - T2^2)^2")
    assert res.k == 2 and res.edeg == 2 and not res.birational
    _check_result(P, res)


def test_odd_scheme():
    P = Parametrization.parse(["s^5 + t^5", "s^4*t", "s*t^4 - s^2*t^3"])
    assert mu_basis(P).mu == 2
    res = implicitize(P)
    assert res.scheme == "odd"
    _check_result(P, res)


@pytest.mark.parametrize("forms", [
    ("s^2", "s*t", "t^2"), ("s^4", "t^4", "s^3*t"), ("s^4", "s^2*t^2", "t^4"),
    ("s^3", "t^3", "s*t^2"), ("s^6", "t^6", "s^3*t^3"), ("s^4", "t^4", "s^2*t^2"),
])
def test_birationality_coherence(forms):
    P = Parametrization.parse(list(forms))
    res = implicitize(P)
    M = MonomialIdeal.from_polys(P.ring, list(forms))
    bir, e1 = birational_test(M, P.n)
    assert bir == res.birational
    assert (e1 == (P.n ** 2 - P.n) // 2) == res.birational


def test_perfect_power_root():
    B = PolyRing.from_names("T1,T2,T3")
    c, F, k = perfect_power_root(B("-3*(T1*T3 - T2^2)^3"))
    assert k == 3 and F * F * F * c == B("-3*(T1*T3 - T2^2)^3")
    c, F, k = perfect_power_root(B("T1^2 - T2^2"))
    assert k == 1


def test_resultant_examples():
    P = Parametrization.parse(["s^2", "s*t", "t^2"])
    F = resultant_oracle(P)
    B = F.ring
    assert F in (B("T2^2 - T1*T3"), B("T1*T3 - T2^2"))


def test_secondary_elimination_degree():
    R = PolyRing.from_names("x1,x2,x3,x4")
    J = Ideal(R, ["x1^3", "x2^3", "x3^3", "x4^3"])
    r, hf = secondary_elimination_degree(J, R("x1^2*x2 + x3^2*x4"))
    assert (r, hf) == (6, (1, 4, 9, 9, 4, 1))
    S = PolyRing.from_names("s,t")
    r, hf = secondary_elimination_degree(Ideal(S, ["s^2", "t^2"]), S("s*t"))
    assert (r, hf) == (1, (1,))
    assert secondary_elim_degree(Parametrization.parse(["s^2", "s*t", "t^2"])) == 1
    with pytest.raises(ValueError):
        secondary_elimination_degree(Ideal(S, ["s^2", "t^2"]), S("s^3"))
    with pytest.raises(ValueError):
        secondary_elimination_degree(Ideal(S, ["s^2", "s*t"]), S("t^2"))


def test_invalid_parametrizations():
    with pytest.raises(DegenerateParametrization):
        Parametrization.parse(["s^2", "s*t", "s^2 + s*t"])    # common factor s
    with pytest.raises(ValueError):
        Parametrization.parse(["s^2", "s*t", "t^3"])          # unequal degrees
    with pytest.raises(ValueError):
        Parametrization.parse(["s^2", "2*s^2", "3*s^2"])      # proportional
    with pytest.raises(ValueError):
        Parametrization.parse(["s*T1", "t^2", "s^2"], names="s,t,T1")


def test_scheme_not_covered():
    # n = 6 with mu = 2 is neither the chain nor the balanced case
    P = Parametrization.parse(["s^6", "t^6", "s^4*t^2"])
    assert mu_basis(P).degrees == (2, 4)
    with pytest.raises(SchemeNotCovered):
        implicitize(P)
    # linearly dependent forms: mu = 0
    P = Parametrization.parse(["t^3", "s^3 + t^3", "s^3"])
    assert mu_basis(P).degrees == (0, 3)
    with pytest.raises(SchemeNotCovered):
        implicitize(P)
