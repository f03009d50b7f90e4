"""Buchberger's algorithm and the ideal operations built on it.

Everything is computed over the rationals.  Gröbner bases are reduced and
deterministic for a fixed generating set and term order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .polyring import Polynomial, PolyRing, TermOrder, RingMismatchError

__all__ = [
    "DeskScaleExceeded",
    "NotArtinianError",
    "Ideal",
    "GroebnerBasis",
    "StaircaseCount",
    "buchberger",
    "normal_form",
    "initial_ideal_generators",
    "ideal_equal",
    "ideal_contains",
    "intersect",
    "colon",
    "saturate",
    "artinian_length",
    "socle_degree",
    "standard_monomial_counts",
    "is_artinian_monomial",
    "ideal_power",
]

DEFAULT_MAX_BASIS = 5000
DEFAULT_MAX_DEGREE = 200


class DeskScaleExceeded(RuntimeError):
    """The Gröbner computation outgrew the configured resource cap."""


class NotArtinianError(ValueError):
    pass


# ---------------------------------------------------------------------------
# raw helpers on exponent tuples


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Poly:
    """Mutable-free working polynomial used inside the engine."""

    __slots__ = ("terms", "lead", "lc")

    def __init__(self, terms: dict, key):
        self.terms = terms
        self.lead = max(terms, key=key)
        self.lc = terms[self.lead]


def _reduce(terms: dict, basis: Sequence[_Poly], key, full: bool = True) -> dict:
    """Normal form of ``terms`` modulo ``basis`` (a list of _Poly)."""
    rem = dict(terms)
    out: dict = {}
    leads = [(g.lead, g) for g in basis]
    while rem:
        e = max(rem, key=key)
        c = rem[e]
        for le, g in leads:
            if _divides(le, e):
                d = _sub(e, le)
                q = c / g.lc
                for ge, gc in g.terms.items():
                    m = _add(ge, d)
                    v = rem.get(m, 0) - q * gc
                    if v:
                        rem[m] = v
                    else:
                        rem.pop(m, None)
                break
        else:
            out[e] = rem.pop(e)
            if not full:
                out.update(rem)
                return out
    return out


def _spoly(f: _Poly, g: _Poly) -> dict:
    l = _lcm(f.lead, g.lead)
    df, dg = _sub(l, f.lead), _sub(l, g.lead)
    t: dict = {}
    for e, c in f.terms.items():
        t[_add(e, df)] = c / f.lc
    for e, c in g.terms.items():
        m = _add(e, dg)
        v = t.get(m, 0) - c / g.lc
        if v:
            t[m] = v
        else:
            t.pop(m, None)
    return t


def _gm_update(G: list, pairs: list, h_idx: int, active: list):
    """Gebauer-Möller update: add pairs for new element ``h_idx``."""
    h = G[h_idx].lead
    # candidate pairs (i, h)
    cands = [(i, _lcm(G[i].lead, h)) for i in active]
    keep = []
    for idx, (i, l) in enumerate(cands):
        coprime = _coprime(G[i].lead, h)
        # criterion M: drop if some other candidate lcm properly divides l
        dominated = False
        for j, l2 in cands:
            if j != i and _divides(l2, l) and l2 != l:
                dominated = True
                break
        if dominated:
            continue
        keep.append((i, l, coprime))
    # criterion F: among equal lcms keep one (prefer a coprime one, which is then dropped)
    chosen = {}
    for i, l, cop in keep:
        if l not in chosen or (cop and not chosen[l][1]):
            chosen[l] = (i, cop)
    newpairs = [(i, l) for l, (i, cop) in chosen.items() if not cop]
    # criterion B: drop old pairs (i, j) whose lcm is divisible by h strictly
    filtered = []
    for (i, j, l) in pairs:
        if _divides(h, l) and _lcm(G[i].lead, h) != l and _lcm(G[j].lead, h) != l:
            continue
        filtered.append((i, j, l))
    filtered.extend((i, h_idx, l) for i, l in newpairs)
    # drop basis elements whose lead is divisible by h
    new_active = [i for i in active if not _divides(h, G[i].lead)]
    new_active.append(h_idx)
    return filtered, new_active


def _buchberger_raw(polys: list[dict], key, weights, max_basis, max_degree) -> list[_Poly]:
    def wdeg(e):
        return sum(w * x for w, x in zip(weights, e))

    # initial interreduction, smallest leading terms first
    work = [_Poly(t, key) for t in polys if t]
    work.sort(key=lambda p: key(p.lead))
    G: list[_Poly] = []
    pairs: list = []
    active: list[int] = []
    def add(r: dict):
        nonlocal pairs, active
        h = _Poly(r, key)
        h = _Poly({e: c / h.lc for e, c in r.items()}, key)
        G.append(h)
        # keep the working basis tail-reduced: this is what keeps the
        # coefficients from swelling under lex-like orders
        for k in active:
            g = G[k]
            if any(_divides(h.lead, e) for e in g.terms if e != g.lead):
                tail = {e: c for e, c in g.terms.items() if e != g.lead}
                t = _reduce(tail, [G[m] for m in active if m != k] + [h], key)
                t[g.lead] = g.lc
                G[k] = _Poly(t, key)
        pairs, active = _gm_update(G, pairs, len(G) - 1, active)

    for p in work:
        r = _reduce(p.terms, [G[i] for i in active], key)
        if r:
            add(r)
    while pairs:
        # normal strategy: smallest lcm in the term order itself; selecting by
        # degree first makes lex computations blow up
        pairs.sort(key=lambda t: key(t[2]), reverse=True)
        i, j, l = pairs.pop()
        if wdeg(l) > max_degree:
            raise DeskScaleExceeded(f"S-pair degree {wdeg(l)} above cap {max_degree}")
        s = _spoly(G[i], G[j])
        if not s:
            continue
        r = _reduce(s, [G[k] for k in active], key)
        if not r:
            continue
        if len(active) + 1 > max_basis:
            raise DeskScaleExceeded(f"basis size above cap {max_basis}")
        add(r)
    # minimal then reduced basis
    minimal = [G[i] for i in active]
    minimal = [
        g for g in minimal
        if not any(h is not g and _divides(h.lead, g.lead) and h.lead != g.lead for h in minimal)
    ]
    seen = set()
    uniq = []
    for g in minimal:
        if g.lead not in seen:
            seen.add(g.lead)
            uniq.append(g)
    reduced = []
    for g in uniq:
        others = [h for h in uniq if h is not g]
        r = _reduce(g.terms, others, key)
        lc = r[g.lead]
        reduced.append(_Poly({e: c / lc for e, c in r.items()}, key))
    reduced.sort(key=lambda p: key(p.lead), reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing  # carries the order used
    polys: tuple[Polynomial, ...]
    reduced: bool = True

    @property
    def order(self) -> TermOrder:
        return self.ring.order

    def lead_exps(self) -> list[tuple[int, ...]]:
        return [p.lead_exp() for p in self.polys]

    def _work(self):
        key = self.ring.key
        return [_Poly(p.terms, key) for p in self.polys]

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def is_unit(self) -> bool:
        return any(p.is_constant() and p for p in self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


class Ideal:
    """An ideal given by generators; Gröbner bases are memoised per order."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial | str] = ()):
        out = []
        seen = set()
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring.names != ring.names:
                raise RingMismatchError("generator from another ring")
            g = Polynomial(ring, g.terms, False)
            if g.is_zero():
                continue
            k = frozenset(g.terms.items())
            if k in seen:
                continue
            seen.add(k)
            out.append(g)
        self.ring = ring
        self.gens: tuple[Polynomial, ...] = tuple(out)
        self._gb: dict = {}

    @classmethod
    def parse(cls, ring: PolyRing, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def groebner(self, order: TermOrder | str | None = None, **caps) -> GroebnerBasis:
        if order is None:
            order = self.ring.order
        if isinstance(order, str):
            order = TermOrder(order)
        if order not in self._gb:
            self._gb[order] = buchberger(self, order, **caps)
        return self._gb[order]

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def contains(self, p: Polynomial) -> bool:
        return self.groebner().contains(p)

    def contains_ideal(self, other: "Ideal") -> bool:
        gb = self.groebner()
        return all(gb.contains(g) for g in other.gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def buchberger(I: Ideal, order: TermOrder | str | None = None,
               max_basis: int = DEFAULT_MAX_BASIS,
               max_degree: int = DEFAULT_MAX_DEGREE) -> GroebnerBasis:
    """Reduced Gröbner basis of ``I`` in ``order``."""
    if order is None:
        order = I.ring.order
    if isinstance(order, str):
        order = TermOrder(order)
    ring = I.ring.with_order(order)
    key = ring.key
    raw = _buchberger_raw([dict(g.terms) for g in I.gens], key, ring.weights,
                          max_basis, max_degree)
    polys = tuple(Polynomial(ring, p.terms, False) for p in raw)
    return GroebnerBasis(ring, polys, True)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``p`` modulo ``G``."""
    key = G.ring.key
    r = _reduce(p.terms, G._work(), key)
    return Polynomial(G.ring, r, False)


def initial_ideal_generators(I: Ideal, order=None) -> list[tuple[int, ...]]:
    """Exponents of the leading monomials of the reduced basis (minimal generators)."""
    return I.groebner(order).lead_exps()


def ideal_contains(I: Ideal, J: Ideal, order=None) -> bool:
    gb = I.groebner(order)
    return all(gb.contains(g) for g in J.gens)


def ideal_equal(I: Ideal, J: Ideal, order=None) -> bool:
    """True iff the reduced Gröbner bases coincide."""
    if I.ring.names != J.ring.names:
        raise RingMismatchError("ideals in different rings")
    a = I.groebner(order)
    b = J.groebner(order)
    return {frozenset(p.terms.items()) for p in a} == {frozenset(p.terms.items()) for p in b}


# ---------------------------------------------------------------------------
# intersection, colon, saturation


def _monomial_gens(I: Ideal):
    return [g.lead_exp() for g in I.gens]


def _minimalize(exps):
    exps = sorted(set(exps), key=lambda e: (sum(e), e))
    out = []
    for e in exps:
        if not any(_divides(m, e) for m in out):
            out.append(e)
    return out


def _extended_ring(ring: PolyRing, name: str = "w_") -> tuple[PolyRing, str]:
    while name in ring.names:
        name += "_"
    ext = PolyRing((name,) + ring.names, (1,) + ring.weights,
                   TermOrder("elim", (1, ring.nvars)))
    return ext, name


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via elimination of an auxiliary variable w from wI + (1-w)J."""
    ring = I.ring
    if I.is_monomial() and J.is_monomial():
        gens = [_lcm(a, b) for a in _monomial_gens(I) for b in _monomial_gens(J)]
        return Ideal(ring, [ring.monomial(e) for e in _minimalize(gens)])
    ext, w = _extended_ring(ring)
    emb = list(range(1, ring.nvars + 1))
    wv = ext.var(0)
    gens = [wv * g.to_ring(ext, emb) for g in I.gens]
    gens += [(1 - wv) * g.to_ring(ext, emb) for g in J.gens]
    gb = buchberger(Ideal(ext, gens), ext.order)
    keep = []
    for p in gb:
        if all(e[0] == 0 for e in p.terms):
            keep.append(Polynomial(ring, {e[1:]: c for e, c in p.terms.items()}, False))
    return Ideal(ring, keep)


def _colon_poly(I: Ideal, f: Polynomial) -> Ideal:
    ring = I.ring
    if f.is_constant():
        return I
    if I.is_monomial() and f.is_monomial():
        m = f.lead_exp()
        gens = [tuple(max(a - b, 0) for a, b in zip(g, m)) for g in _monomial_gens(I)]
        return Ideal(ring, [ring.monomial(e) for e in _minimalize(gens)])
    inter = intersect(I, Ideal(ring, [f]))
    return Ideal(ring, [g.exact_div(f) for g in inter.gens])


def colon(I: Ideal, J: Ideal) -> Ideal:
    """I : J as the intersection of the colons by the generators of J."""
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for f in J.gens:
        c = _colon_poly(I, f)
        result = c if result is None else intersect(result, c)
    # a tidy generating set: the reduced basis
    gb = result.groebner(I.ring.order)
    return Ideal(I.ring, gb.polys)


def saturate(I: Ideal, J: Ideal, max_steps: int = 100) -> tuple[Ideal, int]:
    """Return ``(I : J^∞, k)`` with k the first exponent where the chain stabilises."""
    current = Ideal(I.ring, I.groebner().polys)
    for k in range(max_steps + 1):
        nxt = colon(current, J)
        if ideal_equal(nxt, current):
            return current, k
        current = nxt
    raise DeskScaleExceeded(f"saturation did not stabilise in {max_steps} steps")


# ---------------------------------------------------------------------------
# counting standard monomials


@dataclass(frozen=True)
class StaircaseCount:
    """Per-degree counts of standard monomials.  ``total`` is ``math.inf``
    when the quotient is not Artinian (then ``per_degree`` is empty)."""

    per_degree: tuple[int, ...]
    total: float | int

    @property
    def finite(self) -> bool:
        return self.total != math.inf


def is_artinian_monomial(leads: Sequence[Sequence[int]], nvars: int) -> bool:
    return _pure_power_bounds(leads, nvars) is not None


def _pure_power_bounds(leads, nvars):
    bounds = [None] * nvars
    for e in leads:
        nz = [i for i, x in enumerate(e) if x]
        if len(nz) == 1:
            i = nz[0]
            bounds[i] = e[i] if bounds[i] is None else min(bounds[i], e[i])
        elif not nz:
            return [0] * nvars
    if any(b is None for b in bounds):
        return None
    return bounds


def standard_monomial_counts(leads: Sequence[Sequence[int]], nvars: int,
                             weights: Sequence[int] | None = None) -> StaircaseCount:
    """Count monomials outside the monomial ideal generated by ``leads``."""
    weights = tuple(weights) if weights else (1,) * nvars
    bounds = _pure_power_bounds(leads, nvars)
    if bounds is None:
        return StaircaseCount((), math.inf)
    if any(b == 0 for b in bounds):
        return StaircaseCount((), 0)
    leads = [tuple(e) for e in leads]
    counts: dict[int, int] = {}

    def rec(i, prefix, deg, cands):
        # cands: leads still compatible with prefix (all earlier coords <= prefix)
        if i == nvars:
            counts[deg] = counts.get(deg, 0) + 1
            return
        for k in range(bounds[i]):
            e_pref = prefix + (k,)
            nc = [l for l in cands if l[i] <= k]
            if any(all(l[j] == 0 for j in range(i + 1, nvars)) for l in nc):
                break  # this and all larger k are in the ideal
            rec(i + 1, e_pref, deg + weights[i] * k, nc)

    rec(0, (), 0, leads)
    top = max(counts) if counts else -1
    per = tuple(counts.get(d, 0) for d in range(top + 1))
    return StaircaseCount(per, sum(per))


def artinian_length(I: Ideal, order=None) -> StaircaseCount:
    """λ(R/I) with per-degree counts; ``total`` is ``inf`` for non-Artinian quotients."""
    gb = I.groebner(order)
    return standard_monomial_counts(gb.lead_exps(), I.ring.nvars, I.ring.weights)


def socle_degree(I: Ideal, order=None) -> int:
    """Top degree in which R/I is nonzero (I homogeneous with Artinian quotient)."""
    sc = artinian_length(I, order)
    if not sc.finite:
        raise NotArtinianError("quotient is not Artinian")
    if sc.total == 0:
        raise NotArtinianError("quotient is zero")
    return len(sc.per_degree) - 1


# ---------------------------------------------------------------------------
# powers


def _interreduce_linear(ring: PolyRing, polys: list[Polynomial]) -> list[Polynomial]:
    """Drop linear dependencies among homogeneous generators, degree by degree."""
    from .linalg import rref

    by_deg: dict[int, list[Polynomial]] = {}
    for p in polys:
        by_deg.setdefault(p.degree(), []).append(p)
    out = []
    key = ring.key
    for deg in sorted(by_deg):
        group = by_deg[deg]
        mons = sorted({e for p in group for e in p.terms}, key=key, reverse=True)
        col = {e: i for i, e in enumerate(mons)}
        rows = []
        for p in group:
            r = [Fraction(0)] * len(mons)
            for e, c in p.terms.items():
                r[col[e]] = c
            rows.append(r)
        R, _ = rref(rows)
        for r in R:
            out.append(Polynomial(ring, {mons[i]: c for i, c in enumerate(r) if c}, False))
    return out


def ideal_power(I: Ideal, n: int, previous: Ideal | None = None) -> Ideal:
    """I^n with interreduced generators; ``previous`` may supply I^(n-1)."""
    ring = I.ring
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return Ideal(ring, [ring.one()])
    if n == 1:
        base = list(I.gens)
    else:
        prev = previous if previous is not None else ideal_power(I, n - 1)
        base = [a * b for a in prev.gens for b in I.gens]
    if all(p.is_homogeneous() for p in base):
        if all(p.is_monomial() for p in base):
            mins = _minimalize([p.lead_exp() for p in base])
            return Ideal(ring, [ring.monomial(e) for e in mins])
        return Ideal(ring, _interreduce_linear(ring, base))
    return Ideal(ring, base)
