"""Stanley-Reisner rings and the combinatorial degree formulas."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .hilbert import (
    HilbertSeries,
    coefficients_from_series,
    degree_report,
    hilbert_series_monomial,
    tracking_number_monomial,
)
from .monomial import MonomialIdeal
from .polyring import PolyRing

__all__ = [
    "SimplicialComplex",
    "FHVectors",
    "SRDegrees",
    "sr_ideal",
    "sr_complex",
    "fh_vectors",
    "face_series",
    "sr_degrees",
]


class SimplicialComplex:
    """Complex on ``vertices`` stored by its facets (frozensets of labels).

    ``facets=[]`` is the void complex; ``facets=[frozenset()]`` the complex
    consisting of the empty face only.
    """

    def __init__(self, vertices: Sequence, facets: Iterable[Iterable]):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        fs = {frozenset(f) for f in facets}
        for f in fs:
            if not f <= set(self.vertices):
                raise ValueError(f"facet {sorted(f)} uses unknown vertices")
        fs = {f for f in fs if not any(f < g for g in fs)}
        order = {v: i for i, v in enumerate(self.vertices)}
        self.facets = tuple(sorted(fs, key=lambda f: (-len(f), sorted(order[v] for v in f))))

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable], vertices: Sequence | None = None):
        facets = [list(f) for f in facets]
        if vertices is None:
            vertices = sorted({v for f in facets for v in f})
        return cls(vertices, facets)

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """dim Δ = max facet size - 1 (-1 for {∅}); the void complex gets -2."""
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    def faces(self):
        seen = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                for sub in itertools.combinations(sorted(f, key=self.vertices.index), k):
                    s = frozenset(sub)
                    if s not in seen:
                        seen.add(s)
                        yield s

    def is_face(self, s) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and set(self.vertices) == set(other.vertices)
                and set(self.facets) == set(other.facets))

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.facets)))

    def __repr__(self):
        fs = ", ".join("{" + ",".join(str(v) for v in sorted(f, key=self.vertices.index)) + "}"
                       for f in self.facets)
        return f"SimplicialComplex(facets=[{fs}])"


def _ring_for(K: SimplicialComplex) -> PolyRing:
    names = []
    for v in K.vertices:
        s = str(v)
        names.append(s if s[:1].isalpha() else f"x{s}")
    return PolyRing(tuple(names))


def sr_ideal(K: SimplicialComplex, ring: PolyRing | None = None) -> MonomialIdeal:
    """Ideal generated by the minimal non-faces of K."""
    ring = ring or _ring_for(K)
    n = len(K.vertices)
    if ring.nvars != n:
        raise ValueError("ring must have one variable per vertex")
    if K.is_void():
        return MonomialIdeal(ring, [(0,) * n])
    gens = []
    top = K.dim + 2
    for k in range(1, min(n, top) + 1):
        for sub in itertools.combinations(range(n), k):
            verts = [K.vertices[i] for i in sub]
            if K.is_face(verts):
                continue
            if all(K.is_face(verts[:j] + verts[j + 1:]) for j in range(k)):
                gens.append(tuple(1 if i in sub else 0 for i in range(n)))
    return MonomialIdeal(ring, gens)


def sr_complex(I: MonomialIdeal, vertices: Sequence | None = None) -> SimplicialComplex:
    """Complex whose faces are the supports of monomials outside I (I squarefree)."""
    if not I.is_squarefree():
        raise ValueError("Stanley-Reisner correspondence needs a squarefree ideal")
    n = I.nvars
    vertices = tuple(vertices) if vertices is not None else I.ring.names
    if I.is_unit():
        return SimplicialComplex(vertices, [])
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in I.gens]
    faces = []
    for k in range(n, -1, -1):
        for sub in itertools.combinations(range(n), k):
            s = frozenset(sub)
            if any(g <= s for g in supports):
                continue
            if any(s < f for f in faces):
                continue
            faces.append(s)
    return SimplicialComplex(vertices, [[vertices[i] for i in f] for f in faces])


@dataclass(frozen=True)
class FHVectors:
    f: tuple[int, ...]   # f_0..f_{d-1}
    h: tuple[int, ...]   # h_0..h_d
    chi: int             # sum_{i>=0} (-1)^i f_i

    def to_json(self):
        return {"f": list(self.f), "h": list(self.h), "chi": self.chi}


def fh_vectors(K: SimplicialComplex) -> FHVectors:
    if K.is_void():
        raise ValueError("the void complex has no f-vector")
    d = K.dim + 1
    counts = [0] * (d + 1)  # counts[i+1] = f_i, counts[0] = f_{-1}
    for s in K.faces():
        counts[len(s)] += 1
    f = tuple(counts[1:])
    h = tuple(
        sum((-1) ** (k - i) * math.comb(d - i, k - i) * counts[i] for i in range(k + 1))
        for k in range(d + 1)
    )
    chi = sum((-1) ** i * x for i, x in enumerate(f))
    return FHVectors(f, h, chi)


def face_series(K: SimplicialComplex) -> HilbertSeries:
    """Σ_F t^|F|/(1-t)^|F| over all faces, assembled over (1-t)^d."""
    d = K.dim + 1
    K_poly = [0] * (d + 1)
    for s in K.faces():
        k = len(s)
        # t^k (1-t)^(d-k)
        for j in range(d - k + 1):
            K_poly[k + j] += (-1) ** j * math.comb(d - k, j)
    return HilbertSeries.from_kpoly(K_poly, d)


@dataclass(frozen=True)
class SRDegrees:
    dim: int
    deg: int
    gdeg: int
    adeg: int
    tn: int
    e1: int
    maximal_faces_codim1: int

    def to_json(self):
        return self.__dict__.copy()


def sr_degrees(K: SimplicialComplex) -> SRDegrees:
    """deg, gdeg = adeg and tn = d f_{d-1} - f_{d-2} + f'_{d-2}, cross-checked
    against the Hilbert series and the decomposition of the SR ideal."""
    if K.is_void():
        raise ValueError("the void complex has no Stanley-Reisner ring")
    fh = fh_vectors(K)
    d = K.dim + 1
    if d == 0:
        raise ValueError("k[Δ] = k has dimension zero")
    f = (1,) + fh.f  # f[i+1] = f_i
    top = sum(1 for F in K.facets if len(F) == d)
    nfacets = len(K.facets)
    fprime = sum(1 for F in K.facets if len(F) == d - 1)
    tn = d * f[d] - f[d - 1] + fprime

    I = sr_ideal(K)
    H = hilbert_series_monomial(I)
    if H != face_series(K):
        raise AssertionError("face-count series differs from the SR ideal series")
    e = coefficients_from_series(H, 1)
    if H.degree != top:
        raise AssertionError("deg differs from the number of top-dimensional facets")
    if e[1] + fprime != tn:
        raise AssertionError("tn formula disagrees with h'(1) + f'_{d-2}")
    rep = degree_report(I)
    if rep.adeg != nfacets or rep.gdeg != nfacets:
        raise AssertionError("adeg/gdeg differ from the number of facets")
    if tracking_number_monomial(I).tn != tn:
        raise AssertionError("tn formula disagrees with the top-component computation")
    return SRDegrees(d, top, nfacets, nfacets, tn, e[1], fprime)
