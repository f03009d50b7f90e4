import itertools

import pytest

from gradedeg import MonomialIdeal, PolyRing, hilbert_series_monomial
from gradedeg.simplicial import (
    SimplicialComplex,
    face_series,
    fh_vectors,
    sr_complex,
    sr_degrees,
    sr_ideal,
)

from oracles import antichains, monomials


def _complexes(n):
    for facets in antichains(n):
        if not facets or facets == [frozenset()]:
            continue  # void complex and {∅}
        yield SimplicialComplex(range(1, n + 1), facets)


def _faces_by_closure(K):
    out = set()
    for F in K.facets:
        for k in range(len(F) + 1):
            out.update(frozenset(c) for c in itertools.combinations(sorted(F), k))
    return out


def test_euler_identity_exhaustive():
    """h_d = (-1)^(d-1) (χ - 1) for every complex on at most five vertices."""
    count = 0
    for n in range(1, 6):
        for K in _complexes(n):
            faces = _faces_by_closure(K)
            d = max(len(F) for F in faces)
            chi = sum((-1) ** (len(F) - 1) for F in faces if F)
            fh = fh_vectors(K)
            assert fh.chi == chi
            assert fh.h[d] == (-1) ** (d - 1) * (chi - 1)
            assert sum(fh.h) == sum(1 for F in K.facets if len(F) == d)
            count += 1
    assert count > 7000


def test_sr_degrees_exhaustive_small():
    """The internal cross-checks of sr_degrees hold on every complex with
    at most five vertices."""
    for n in range(1, 6):
        for K in _complexes(n):
            rep = sr_degrees(K)
            assert rep.adeg == rep.gdeg == len(K.facets)


def test_sr_degree_examples():
    tri = sr_degrees(SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]]))
    assert (tri.dim, tri.deg, tri.tn) == (2, 3, 3)
    K = sr_degrees(SimplicialComplex.from_facets([[1, 2], [3]]))
    assert (K.deg, K.adeg, K.tn) == (1, 2, 0)
    simplex = sr_degrees(SimplicialComplex.from_facets([[1, 2, 3]]))
    assert (simplex.deg, simplex.tn) == (1, 0)
    two_edges = SimplicialComplex.from_facets([[1, 2], [3, 4]])
    assert fh_vectors(two_edges).h == (1, 2, -1)
    assert sr_degrees(two_edges).tn == 2 * 2 - 4 + 0


def test_sr_ideal_round_trip_and_series():
    R = PolyRing.from_names("x1,x2,x3,x4")
    for gens in [[(1, 1, 0, 0)], [(1, 1, 0, 0), (0, 0, 1, 1)], [(1, 1, 1, 0), (0, 1, 1, 1)], [(0, 0, 0, 1)]]:
        I = MonomialIdeal(R, gens)
        K = sr_complex(I)
        assert sr_ideal(K, R) == I
        assert face_series(K) == hilbert_series_monomial(I)
        # the Hilbert function counts monomials supported on faces
        faces = _faces_by_closure(K)
        labels = K.vertices
        for deg in range(5):
            count = sum(1 for e in monomials(4, deg)
                        if frozenset(labels[i] for i in range(4) if e[i]) in faces)
            assert face_series(K).coefficient(deg) == count


def test_invalid_inputs():
    with pytest.raises(ValueError):
        fh_vectors(SimplicialComplex([1, 2], []))
    with pytest.raises(ValueError):
        sr_degrees(SimplicialComplex([1], [[]]))
    with pytest.raises(ValueError):
        SimplicialComplex([1, 2], [[1, 3]])
    with pytest.raises(ValueError):
        sr_complex(MonomialIdeal(PolyRing.from_names("x,y"), [(2, 0)]))
