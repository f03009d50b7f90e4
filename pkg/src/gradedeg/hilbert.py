"""Hilbert series, Hilbert coefficients and degree functions of quotients R/I."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .groebner import (
    Ideal,
    NotArtinianError,
    artinian_length,
    buchberger,
    ideal_power,
    saturate,
    standard_monomial_counts,
)
from .linalg import solve_linear
from .monomial import MonomialIdeal
from .polyring import DEGLEX, Polynomial, PolyRing, TermOrder, substitute

__all__ = [
    "HilbertSeries",
    "HilbertCoefficients",
    "IrreducibleDecomposition",
    "DegreeReport",
    "TrackingReport",
    "WindowDisagreement",
    "hilbert_numerator",
    "hilbert_series_monomial",
    "hilbert_series",
    "coefficients_from_series",
    "a_invariant",
    "veronese_series",
    "irreducible_decomposition",
    "length_between",
    "degree_report",
    "tracking_number",
    "tracking_number_monomial",
    "top_component",
    "samuel_fit",
    "fit_filtration",
]


class WindowDisagreement(ArithmeticError):
    """Interpolation windows b and b+1 gave different coefficients."""


# ---------------------------------------------------------------------------
# integer polynomials in t, as coefficient lists (index = power)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pneg(a):
    return [-x for x in a]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pshift(a, k):
    return [0] * k + list(a) if a else []


def _div_one_minus_t(p):
    """Return p/(1-t) if exact, else None."""
    if not p:
        return []
    if sum(p) != 0:
        return None
    # p = (1-t) q  =>  q_i = sum_{j<=i} p_j
    q = list(itertools.accumulate(p))
    assert q[-1] == 0
    return _trim(q[:-1])


def _eval(p, x):
    return sum(c * x ** i for i, c in enumerate(p))


def _derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


# ---------------------------------------------------------------------------
# Hilbert series


@dataclass(frozen=True)
class HilbertSeries:
    """h(t)/(1-t)^d with h(1) != 0; the zero module has an empty numerator."""

    numerator: tuple[int, ...]
    dim: int

    @classmethod
    def from_kpoly(cls, K: Sequence[int], n: int) -> "HilbertSeries":
        """Normalise K(t)/(1-t)^n by cancelling common (1-t) factors."""
        K = _trim(K)
        if not K:
            return cls((), 0)
        while n > 0:
            q = _div_one_minus_t(K)
            if q is None:
                break
            K, n = q, n - 1
        if n == 0 and sum(K) == 0:
            raise ValueError("numerator vanishes at 1 with no denominator left: not a Hilbert series")
        return cls(tuple(K), n)

    def is_zero(self) -> bool:
        return not self.numerator

    @property
    def degree(self) -> int:
        """Multiplicity e0 = h(1)."""
        return sum(self.numerator)

    @property
    def a_invariant(self) -> int:
        return len(self.numerator) - 1 - self.dim

    def coefficient(self, n: int) -> int:
        """Value of the Hilbert function in degree n."""
        if n < 0:
            return 0
        d = self.dim
        if d == 0:
            return self.numerator[n] if n < len(self.numerator) else 0
        return sum(h * math.comb(n - k + d - 1, d - 1)
                   for k, h in enumerate(self.numerator) if k <= n)

    def hilbert_function(self, upto: int) -> list[int]:
        return [self.coefficient(n) for n in range(upto + 1)]

    def kpoly(self, n: int) -> list[int]:
        """Numerator over (1-t)^n for n >= dim."""
        if n < self.dim:
            raise ValueError("denominator exponent below the dimension")
        return _pmul(list(self.numerator), _pow_one_minus_t(n - self.dim))

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        n = max(self.dim, other.dim)
        return HilbertSeries.from_kpoly(_padd(self.kpoly(n), _pneg(other.kpoly(n))), n)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        n = max(self.dim, other.dim)
        return HilbertSeries.from_kpoly(_padd(self.kpoly(n), other.kpoly(n)), n)

    def numerator_string(self, var: str = "t") -> str:
        return _fmt_tpoly(self.numerator, var)

    def __str__(self):
        num = self.numerator_string()
        if self.dim == 0:
            return num
        den = "(1-t)" if self.dim == 1 else f"(1-t)^{self.dim}"
        if len([c for c in self.numerator if c]) > 1:
            num = f"({num})"
        return f"{num}/{den}"

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "denominator_exponent": self.dim}


def _fmt_tpoly(coeffs, var="t"):
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) or "0"


def _pow_one_minus_t(k):
    return [(-1) ** i * math.comb(k, i) for i in range(k + 1)]


def hilbert_numerator(gens: Sequence[Sequence[int]], weights: Sequence[int]) -> list[int]:
    """K(t) with H(R/I) = K(t) / prod(1 - t^w_i), by pivot recursion."""
    weights = tuple(weights)
    memo: dict = {}

    def wdeg(e):
        return sum(w * x for w, x in zip(weights, e))

    def rec(gs: frozenset) -> list[int]:
        if gs in memo:
            return memo[gs]
        if not gs:
            return [1]
        if any(not any(g) for g in gs):
            return []
        glist = sorted(gs)
        n = len(weights)
        counts = [sum(1 for g in glist if g[i]) for i in range(n)]
        if max(counts) <= 1:
            out = [1]
            for g in glist:
                out = _pmul(out, _padd([1], _pneg(_pshift([1], wdeg(g)))))
            memo[gs] = out
            return out
        i = max(range(n), key=lambda j: (counts[j], -j))
        e = min(g[i] for g in glist if g[i])
        piv = tuple(e if j == i else 0 for j in range(n))
        plus = frozenset(_min_gens([g for g in glist if g[i] < e] + [piv]))
        quo = frozenset(_min_gens([tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in glist]))
        out = _padd(rec(plus), _pshift(rec(quo), wdeg(piv)))
        memo[gs] = out
        return out

    return rec(frozenset(_min_gens([tuple(g) for g in gens])))


def _min_gens(exps):
    exps = sorted(set(exps), key=lambda e: (sum(e), e))
    out = []
    for e in exps:
        if not any(all(a <= b for a, b in zip(m, e)) for m in out):
            out.append(e)
    return out


def _require_standard(ring: PolyRing):
    if any(w != 1 for w in ring.weights):
        raise ValueError("h(t)/(1-t)^d form needs a standard grading (unit weights)")


def hilbert_series_monomial(I: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of R/I for a monomial ideal I."""
    _require_standard(I.ring)
    K = hilbert_numerator(I.gens, I.ring.weights)
    return HilbertSeries.from_kpoly(K, I.nvars)


def hilbert_series(I: Ideal, order: TermOrder | str | None = None) -> HilbertSeries:
    """Hilbert series of R/I through the initial ideal (Macaulay's theorem)."""
    if not I.is_homogeneous():
        raise ValueError("hilbert_series needs a homogeneous ideal")
    if I.is_monomial():
        return hilbert_series_monomial(MonomialIdeal.from_ideal(I))
    return hilbert_series_monomial(MonomialIdeal.initial(I, order))


@dataclass(frozen=True)
class HilbertCoefficients:
    values: tuple
    source: str
    window: int | None = None

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def to_json(self):
        out = {"e": [_num(v) for v in self.values], "source": self.source}
        if self.window is not None:
            out["window"] = self.window
        return out


def _num(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    return v


def _intify(v: Fraction):
    return int(v) if v.denominator == 1 else v


def coefficients_from_series(H: HilbertSeries, k: int | None = None) -> HilbertCoefficients:
    """e_i = h^(i)(1)/i! for i = 0..k (k defaults to the dimension)."""
    if k is None:
        k = H.dim
    h = list(H.numerator)
    vals = []
    p = h
    fact = 1
    for i in range(k + 1):
        if i:
            fact *= i
        vals.append(Fraction(_eval(p, 1), fact))
        p = _derivative(p)
    return HilbertCoefficients(tuple(_intify(v) for v in vals), "series-derivative")


def a_invariant(H: HilbertSeries) -> int:
    return H.a_invariant


def veronese_series(nvars: int, step: int) -> HilbertSeries:
    """Series of the step-th Veronese subring of k[x_1..x_nvars], regraded."""
    if nvars < 1 or step < 1:
        raise ValueError("need nvars >= 1 and step >= 1")
    d = nvars
    vals = [math.comb(step * k + d - 1, d - 1) for k in range(d + 1)]
    K = [sum((-1) ** j * math.comb(d, j) * vals[k - j] for j in range(k + 1)) for k in range(d + 1)]
    return HilbertSeries.from_kpoly(K, d)


# ---------------------------------------------------------------------------
# decompositions and degrees of monomial quotients


@dataclass(frozen=True)
class IrreducibleDecomposition:
    components: tuple[MonomialIdeal, ...]
    multiplicities: dict  # prime (tuple of variable indices) -> length multiplicity

    @property
    def associated_primes(self) -> list[tuple[int, ...]]:
        return sorted(self.multiplicities, key=lambda p: (len(p), p))

    def minimal_primes(self) -> list[tuple[int, ...]]:
        ps = self.associated_primes
        return [p for p in ps if not any(set(q) < set(p) for q in ps)]

    def prime_dim(self, p, nvars) -> int:
        return nvars - len(p)


def _irr_components(gens: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Irreducible components as exponent vectors (0 = variable absent)."""
    if any(not any(g) for g in gens):
        return []
    for g in gens:
        nz = [i for i, x in enumerate(g) if x]
        if len(nz) > 1:
            i = nz[0]
            a = tuple(g[i] if j == i else 0 for j in range(n))
            b = tuple(0 if j == i else g[j] for j in range(n))
            rest = [h for h in gens if h is not g]
            return (_irr_components(_min_gens(rest + [a]), n)
                    + _irr_components(_min_gens(rest + [b]), n))
    comp = [0] * n
    for g in gens:
        for i, x in enumerate(g):
            if x:
                comp[i] = x if not comp[i] else min(comp[i], x)
    return [tuple(comp)]


def _comp_contains(big, small) -> bool:
    """Pure-power ideal ``big`` contains pure-power ideal ``small``."""
    for s, b in zip(small, big):
        if s and (not b or b > s):
            return False
    return True


def irreducible_decomposition(I: MonomialIdeal) -> IrreducibleDecomposition:
    n = I.nvars
    comps = list(dict.fromkeys(_irr_components(list(I.gens), n)))
    irred = [c for c in comps
             if not any(d != c and _comp_contains(c, d) for d in comps)]
    irred.sort(key=lambda c: (sum(1 for x in c if x), c))
    ring = I.ring
    components = tuple(
        MonomialIdeal(ring, [tuple(c[i] if j == i else 0 for j in range(n)) for i in range(n) if c[i]])
        for c in irred
    )
    primes = sorted({tuple(i for i in range(n) if c[i]) for c in irred}, key=lambda p: (len(p), p))
    mults = {p: _local_multiplicity(I, p) for p in primes}
    return IrreducibleDecomposition(components, mults)


def length_between(small: MonomialIdeal, big: MonomialIdeal) -> int:
    """λ(big/small) for monomial ideals small ⊆ big with finite-length quotient."""
    diff = hilbert_series_monomial(small) - hilbert_series_monomial(big)
    if diff.is_zero():
        return 0
    if diff.dim != 0:
        raise NotArtinianError("quotient does not have finite length")
    return diff.degree


def _local_multiplicity(I: MonomialIdeal, prime: tuple[int, ...]) -> int:
    """λ(H^0_p((R/I)_p)): invert variables outside p, then count the torsion."""
    if not prime:
        return 1  # zero ideal: R is a domain
    loc = I.localize(prime).restrict(prime)
    m = loc.maximal_ideal()
    sat, _ = loc.saturate(m)
    return length_between(loc, sat)


@dataclass(frozen=True)
class DegreeReport:
    dim: int
    deg: int
    gdeg: int
    adeg: int
    h0: int
    extended_degree: int | None

    def to_json(self):
        return {
            "dim": self.dim, "deg": self.deg, "gdeg": self.gdeg, "adeg": self.adeg,
            "h0": self.h0, "extended_degree": self.extended_degree,
        }


def degree_report(I: MonomialIdeal) -> DegreeReport:
    """deg, gdeg, adeg and λ(H^0_m) of R/I from one irreducible decomposition."""
    n = I.nvars
    if I.is_unit():
        raise ValueError("R/I is zero")
    dec = irreducible_decomposition(I)
    H = hilbert_series_monomial(I)
    dim = H.dim
    deg = H.degree
    minimal = dec.minimal_primes()
    gdeg = sum(dec.multiplicities[p] for p in minimal)
    adeg = sum(dec.multiplicities.values())
    m = I.maximal_ideal()
    sat, _ = I.saturate(m)
    h0 = length_between(I, sat)
    if dim == 1:
        ext = deg + h0
        if ext != adeg:
            raise AssertionError(f"deg + h0 = {ext} differs from adeg = {adeg}")
    elif dim == 0:
        ext = deg
    else:
        ext = None
    return DegreeReport(dim, deg, gdeg, adeg, h0, ext)


# ---------------------------------------------------------------------------
# tracking numbers


@dataclass(frozen=True)
class TrackingReport:
    tn: int
    e1: int
    torsion_multiplicity: int  # ê0 of the torsion, 0 unless its dim is d-1
    torsion_dim: int | None    # None when there is no torsion
    series: HilbertSeries
    top_series: HilbertSeries

    def to_json(self):
        return {
            "tn": self.tn, "e1": self.e1,
            "torsion_multiplicity": self.torsion_multiplicity,
            "torsion_dim": self.torsion_dim,
            "series": self.series.to_json(),
            "top_series": self.top_series.to_json(),
        }


def _tracking_from_series(H: HilbertSeries, Htop: HilbertSeries) -> TrackingReport:
    d = H.dim
    if d < 1:
        raise ValueError("tracking number needs dim R/I >= 1")
    if Htop.dim != d or Htop.degree != H.degree:
        raise AssertionError("top-dimensional part has the wrong dimension or degree")
    e1 = coefficients_from_series(H, 1)[1]
    torsion = H - Htop
    if torsion.is_zero():
        tdim, tmult = None, 0
    else:
        tdim = torsion.dim
        tmult = torsion.degree if tdim == d - 1 else 0
    tn = e1 + tmult
    tn_top = coefficients_from_series(Htop, 1)[1]
    if tn != tn_top:
        raise AssertionError(f"e1 + torsion ({tn}) differs from e1 of the top part ({tn_top})")
    return TrackingReport(tn, e1, tmult, tdim, H, Htop)


def tracking_number_monomial(I: MonomialIdeal) -> TrackingReport:
    """tn(R/I) for a monomial ideal, from the top-dimensional components."""
    dec = irreducible_decomposition(I)
    n = I.nvars
    comps = dec.components
    dims = [n - len(c.gens) for c in comps]
    d = max(dims)
    top = None
    for c, dc in zip(comps, dims):
        if dc == d:
            top = c if top is None else top.intersect(c)
    return _tracking_from_series(hilbert_series_monomial(I), hilbert_series_monomial(top))


def top_component(I: Ideal, seed: int = 0, attempts: int = 8) -> tuple[Ideal, Ideal, list]:
    """Intersection of the top-dimensional primary components of I.

    Works in coordinates where the last d variables are a Noether
    normalisation: with G a Gröbner basis for the block order (others > last
    d) and h the product of the leading coefficients in k[last d], the top
    part is I : h^∞.  Returns ``(top, transformed_I, images)`` where ``images``
    is the coordinate change used (top lives in the same coordinates as
    transformed_I).
    """
    ring = I.ring
    n = ring.nvars
    H = hilbert_series(I)
    d = H.dim
    if d == 0:
        raise ValueError("zero-dimensional quotient")
    rng = random.Random(seed)
    for attempt in range(attempts):
        if attempt == 0:
            images = ring.gens()
        else:
            # unipotent shear: the last d variables pick up the first n-d
            images = []
            for j in range(n):
                p = ring.var(j)
                if j >= n - d:
                    for i in range(n - d):
                        p = p + ring.var(i).scale(rng.randint(-3, 3))
                images.append(p)
        J = Ideal(ring, [substitute(g, images) for g in I.gens])
        top = _torsion_free_part(J, d)
        Ht = hilbert_series(top)
        if Ht.dim == d and Ht.degree == H.degree:
            return top, J, images
    raise RuntimeError("no Noether normalisation found among the tried coordinates")


def _torsion_free_part(J: Ideal, d: int) -> Ideal:
    ring = J.ring
    n = ring.nvars
    if d == n:
        return J
    order = TermOrder("elim", (n - d, d))
    gb = buchberger(J, order)
    h = ring.one()
    for g in gb:
        # leading coefficient with respect to the first n-d variables
        lead = g.lead_exp()[: n - d]
        lc_terms = {e: c for e, c in g.terms.items() if e[: n - d] == lead}
        lc = Polynomial(ring, {(0,) * (n - d) + e[n - d:]: c for e, c in lc_terms.items()}, False)
        if not lc.is_constant():
            h = h * lc
    if h.is_constant():
        return J
    sat, _ = saturate(J, Ideal(ring, [h]))
    return sat


def tracking_number(I: Ideal, order: TermOrder | str | None = None) -> TrackingReport:
    """tn(R/I) = e1(R/I) + ê0(torsion) = e1 of the top-dimensional part."""
    if not I.is_homogeneous():
        raise ValueError("tracking number needs a homogeneous ideal")
    if I.is_monomial():
        return tracking_number_monomial(MonomialIdeal.from_ideal(I))
    top, J, _ = top_component(I)
    return _tracking_from_series(hilbert_series(J, order), hilbert_series(top, order))


# ---------------------------------------------------------------------------
# Hilbert-Samuel interpolation


def _fit_window(gr_len: Callable[[int], int], colen: Callable[[int], int], d: int, b: int):
    A = [[math.comb(j + d - i - 1, d - i - 1) for i in range(d)] for j in range(b + 1, b + d + 1)]
    c = [gr_len(j) for j in range(b + 1, b + d + 1)]
    x = solve_linear(A, c)
    e = [(-1) ** i * v for i, v in enumerate(x)]
    # e_d from the Samuel function λ(R/I^{n+1}) = Σ_{i<=d} (-1)^i e_i C(n+d-i, d-i)
    nn = b + d
    val = colen(nn + 1) - sum((-1) ** i * e[i] * math.comb(nn + d - i, d - i) for i in range(d))
    e.append((-1) ** d * val)
    return tuple(_intify(Fraction(v)) for v in e), c


def fit_filtration(colength: Callable[[int], int], d: int, b: int,
                   source: str = "samuel-fit") -> tuple[HilbertCoefficients, list]:
    """Fit e_0..e_d of a filtration from colengths λ(R/I_n), n >= 0.

    The gr lengths c_j = colength(j+1) - colength(j) for j = b+1..b+d are
    interpolated; the fit is repeated at window b+1 and both must agree.
    """
    cache: dict[int, int] = {}

    def colen(n):
        if n not in cache:
            cache[n] = colength(n)
        return cache[n]

    def gr(j):
        return colen(j + 1) - colen(j)

    e1, c = _fit_window(gr, colen, d, b)
    e2, _ = _fit_window(gr, colen, d, b + 1)
    if e1 != e2:
        raise WindowDisagreement(f"window {b} gives {e1}, window {b + 1} gives {e2}")
    return HilbertCoefficients(e1, source, b), c


def samuel_fit(I: Ideal, b: int, order: TermOrder | str | None = None,
               return_lengths: bool = False):
    """Hilbert-Samuel coefficients e_0..e_d of an m-primary ideal by interpolation.

    Solves A x = c with A_ji = C(j+d-i-1, d-i-1) and c_j = λ(I^j/I^{j+1}),
    j = b+1..b+d, and returns e_i = (-1)^i x_i, plus e_d from the colength.
    """
    d = I.ring.nvars
    if I.is_monomial():
        M = MonomialIdeal.from_ideal(I)
        if not M.is_m_primary():
            raise NotArtinianError("samuel_fit needs an m-primary ideal")

        def colength(n):
            return _monomial_colength(M ** n)
    else:
        powers = _PowerCache(I, order)

        def colength(n):
            sc = artinian_length(powers.get(n), order)
            if not sc.finite:
                raise NotArtinianError("samuel_fit needs an m-primary ideal")
            return sc.total

        if not artinian_length(I, order).finite:
            raise NotArtinianError("samuel_fit needs an m-primary ideal")
    coeffs, c = fit_filtration(colength, d, b)
    if return_lengths:
        return coeffs, c
    return coeffs


def _monomial_colength(M: MonomialIdeal) -> int:
    sc = standard_monomial_counts(M.gens, M.nvars, M.ring.weights)
    if not sc.finite:
        raise NotArtinianError("quotient is not Artinian")
    return sc.total


class _PowerCache:
    def __init__(self, I: Ideal, order):
        self.I = I
        self.order = order
        self.powers = {0: Ideal(I.ring, [I.ring.one()]), 1: I}

    def get(self, n: int) -> Ideal:
        if n not in self.powers:
            k = max(k for k in self.powers if k <= n)
            P = self.powers[k]
            while k < n:
                P = ideal_power(self.I, k + 1, previous=P)
                k += 1
                self.powers[k] = P
        return self.powers[n]
