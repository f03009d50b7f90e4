"""Rees-algebra equations of plane curve parametrizations.

A parametrization is a triple of binary forms f1, f2, f3 of degree n in
k[s,t] without common factor.  The equations of its Rees algebra live in
k[s,t,T1,T2,T3]; the elimination equation is the generator of their
s,t-free part.  Everything here is exact and every emitted form is checked
to vanish under Ti -> fi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .groebner import Ideal, NotArtinianError, artinian_length, colon, socle_degree
from .linalg import bareiss_det, nullspace, rank, rref
from .polyring import PolyRing, Polynomial, substitute

__all__ = [
    "DegenerateParametrization",
    "SchemeNotCovered",
    "Parametrization",
    "MuBasis",
    "SylvesterForm",
    "EliminationResult",
    "mu_basis",
    "content_pair",
    "cm_rees_test",
    "basic_sylvester",
    "elimination_chain_mu1",
    "balanced_scheme",
    "balanced_determinant",
    "implicitize",
    "resultant_oracle",
    "perfect_power_root",
    "secondary_elim_degree",
    "secondary_elimination_degree",
]

T_NAMES = ("T1", "T2", "T3")


class DegenerateParametrization(ValueError):
    pass


class SchemeNotCovered(ValueError):
    pass


# ---------------------------------------------------------------------------
# parametrizations


class Parametrization:
    """Three binary forms of a common degree with no common factor."""

    def __init__(self, ring: PolyRing, forms: Sequence[Polynomial | str]):
        if ring.nvars != 2:
            raise ValueError("a parametrization lives in a ring with two variables")
        if any(w != 1 for w in ring.weights):
            raise ValueError("binary forms need the standard grading")
        fs = [ring.parse(f) if isinstance(f, str) else f for f in forms]
        if len(fs) != 3:
            raise ValueError("need exactly three forms")
        if any(f.is_zero() for f in fs):
            raise DegenerateParametrization("zero form")
        if not all(f.is_homogeneous() for f in fs):
            raise ValueError("forms must be homogeneous")
        degs = {f.degree() for f in fs}
        if len(degs) != 1:
            raise ValueError(f"forms of different degrees {sorted(degs)}")
        n = degs.pop()
        if n < 1:
            raise DegenerateParametrization("constant forms")
        mons = sorted({e for f in fs for e in f.terms})
        if rank([[f.coeff(e) for e in mons] for f in fs]) < 2:
            raise DegenerateParametrization("forms are proportional")
        if not artinian_length(Ideal(ring, fs)).finite:
            raise DegenerateParametrization("forms have a common factor")
        self.ring = ring
        self.forms = tuple(fs)
        self.n = n

    @classmethod
    def parse(cls, texts: Sequence[str], names: str = "s,t") -> "Parametrization":
        ring = PolyRing.from_names(names)
        return cls(ring, [ring.parse(t) for t in texts])

    @cached_property
    def biform_ring(self) -> PolyRing:
        clash = set(T_NAMES) & set(self.ring.names)
        if clash:
            raise ValueError(f"variable names {sorted(clash)} are reserved for the Rees variables")
        return PolyRing(tuple(self.ring.names) + T_NAMES)

    def lift(self, p: Polynomial) -> Polynomial:
        """Embed a form of k[s,t] into the biform ring."""
        return p.to_ring(self.biform_ring, [0, 1])

    def images(self) -> list[Polynomial]:
        B = self.biform_ring
        return [B.var(0), B.var(1)] + [self.lift(f) for f in self.forms]

    def vanishes(self, p: Polynomial) -> bool:
        """Does p(s, t, f1, f2, f3) vanish identically?"""
        return substitute(p, self.images()).is_zero()

    def __repr__(self):
        return "Parametrization(" + ", ".join(str(f) for f in self.forms) + ")"


# ---------------------------------------------------------------------------
# mu-bases


def _binary_monomials(deg: int):
    return [(deg - j, j) for j in range(deg + 1)]


def _syzygy_space(forms, n: int, mu: int) -> list[list[Fraction]]:
    """Nullspace of (a1,a2,a3) -> sum ai fi on forms ai of degree mu."""
    cols = _binary_monomials(mu)
    rows = {e: i for i, e in enumerate(_binary_monomials(n + mu))}
    M = [[Fraction(0)] * (3 * len(cols)) for _ in rows]
    for i, f in enumerate(forms):
        for j, (a, b) in enumerate(cols):
            for (x, y), c in f.terms.items():
                M[rows[(a + x, b + y)]][i * len(cols) + j] += c
    return nullspace(M, 3 * len(cols))


def _vector_to_column(ring, vec, mu) -> tuple[Polynomial, ...]:
    cols = _binary_monomials(mu)
    k = len(cols)
    out = []
    for i in range(3):
        out.append(Polynomial(ring, {cols[j]: vec[i * k + j] for j in range(k)}))
    return tuple(out)


def _column_multiples(col_vec, mu, deg):
    """Coefficient vectors of m * col for all monomials m of degree deg - mu."""
    k_small = mu + 1
    k_big = deg + 1
    out = []
    for shift in range(deg - mu + 1):
        v = [Fraction(0)] * (3 * k_big)
        for i in range(3):
            for j in range(k_small):
                v[i * k_big + j + shift] = col_vec[i * k_small + j]
        out.append(v)
    return out


def _normalize_vector(vec):
    piv = next(x for x in vec if x)
    vals = [Fraction(x) / piv for x in vec]
    den = 1
    import math

    for x in vals:
        den = math.lcm(den, x.denominator)
    ints = [int(x * den) for x in vals]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return [Fraction(x, g) for x in ints]


@dataclass(frozen=True)
class MuBasis:
    """Hilbert-Burch matrix: two syzygy columns of degrees mu <= n - mu."""

    columns: tuple[tuple[Polynomial, ...], tuple[Polynomial, ...]]
    degrees: tuple[int, int]

    @property
    def mu(self) -> int:
        return self.degrees[0]

    def minors(self) -> tuple[Polynomial, ...]:
        (a1, a2, a3), (b1, b2, b3) = self.columns
        return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)

    def biforms(self, P: Parametrization) -> tuple[Polynomial, Polynomial]:
        """f = sum Ti phi_i1 and g = sum Ti phi_i2 in the biform ring."""
        B = P.biform_ring
        T = [B.var(n) for n in T_NAMES]
        out = []
        for col in self.columns:
            acc = B.zero()
            for Ti, a in zip(T, col):
                acc = acc + Ti * P.lift(a)
            out.append(acc)
        return out[0], out[1]

    def to_json(self):
        return {"degrees": list(self.degrees),
                "columns": [[str(p) for p in c] for c in self.columns]}


def mu_basis(P: Parametrization) -> MuBasis:
    """Minimal-degree syzygies found degree by degree from exact nullspaces."""
    forms, n, ring = P.forms, P.n, P.ring
    first = None
    mu = None
    for d in range(n + 1):  # d = 0 when the forms are linearly dependent
        space = _syzygy_space(forms, n, d)
        if space:
            first = _normalize_vector(space[0])
            mu = d
            break
    if first is None:
        raise AssertionError("no syzygy up to degree n")
    second = None
    for d in range(mu, n + 1):
        space = _syzygy_space(forms, n, d)
        mult = _column_multiples(first, mu, d)
        base = rank(mult)
        for v in space:
            if rank(mult + [v]) > base:
                # reduce v against the multiples of the first column
                R, piv = rref(mult)
                v = list(v)
                for row, pc in zip(R, piv):
                    if v[pc]:
                        c = v[pc]
                        v = [a - c * b for a, b in zip(v, row)]
                second = (_normalize_vector(v), d)
                break
        if second is not None:
            break
    if second is None or mu + second[1] != n:
        raise AssertionError("syzygy degrees do not add up to n")
    col1 = _vector_to_column(ring, first, mu)
    col2 = _vector_to_column(ring, second[0], second[1])
    mb = MuBasis((col1, col2), (mu, second[1]))
    _check_mu_basis(P, mb)
    return mb


def _check_mu_basis(P: Parametrization, mb: MuBasis):
    for col in mb.columns:
        if sum((a * f for a, f in zip(col, P.forms)), P.ring.zero()):
            raise AssertionError("column is not a syzygy")
    minors = mb.minors()
    ratio = None
    for m, f in zip(minors, P.forms):
        e = f.lead_exp()
        r = m.coeff(e) / f.lead_coeff()
        if not r or m != f.scale(r):
            raise AssertionError("minors do not regenerate the forms")
        if ratio is None:
            ratio = r
        elif r != ratio:
            raise AssertionError("minors regenerate the forms with different scalars")


# ---------------------------------------------------------------------------
# contents and the Cohen-Macaulay test


def _minimal_generators(I: Ideal) -> list[Polynomial]:
    kept: list[Polynomial] = []
    for g in sorted(I.gens, key=lambda p: (p.degree(), [-x for x in p.lead_exp()])):
        if kept and Ideal(I.ring, kept).contains(g):
            continue
        kept.append(g)
    return kept


def content_pair(column: Sequence[Polynomial]) -> Ideal:
    """Ideal of k[s,t] generated by the entries of a syzygy column."""
    ring = column[0].ring
    I = Ideal(ring, [c for c in column if not c.is_zero()])
    return Ideal(ring, _minimal_generators(I))


def cm_rees_test(P: Parametrization, mb: MuBasis | None = None) -> bool:
    """Both columns have the same two-generated content ideal.

    For monomial forms containing s^n and t^n the verdict is checked
    against the reduction number of (s^n, t^n).
    """
    mb = mb or mu_basis(P)
    c1, c2 = (content_pair(c) for c in mb.columns)
    verdict = len(c1.gens) == 2 and c1 == c2
    if all(f.is_monomial() for f in P.forms):
        from .filtration import reduction_number

        s, t = P.ring.gens()
        J = Ideal(P.ring, [s ** P.n, t ** P.n])
        I = Ideal(P.ring, P.forms)
        if I.contains_ideal(J):
            r = reduction_number(J, I, 2)
            if (r is not None and r <= 1) != verdict:
                raise AssertionError("content test disagrees with the reduction number")
    return verdict


# ---------------------------------------------------------------------------
# Sylvester forms


@dataclass(frozen=True)
class SylvesterForm:
    form: Polynomial
    bidegree: tuple[int, int]     # (degree in s,t ; degree in T)
    provenance: str

    def to_json(self):
        return {"form": str(self.form), "bidegree": list(self.bidegree),
                "provenance": self.provenance}


def _st_indices(ring: PolyRing, st) -> tuple[int, int]:
    if st is None:
        if "s" in ring.names and "t" in ring.names:
            return ring.index("s"), ring.index("t")
        return 0, 1
    return ring.index(st[0]), ring.index(st[1])


def _split(p: Polynomial, st) -> dict:
    """(a, b) -> coefficient of s^a t^b, a polynomial free of s and t."""
    i, j = st
    out: dict = {}
    for e, c in p.terms.items():
        key = (e[i], e[j])
        e2 = list(e)
        e2[i] = e2[j] = 0
        out.setdefault(key, {})[tuple(e2)] = c
    return {k: Polynomial(p.ring, v, False) for k, v in out.items()}


def _bidegree(p: Polynomial, st) -> tuple[int, int]:
    if p.is_zero():
        return (0, 0)
    i, j = st
    e = next(iter(p.terms))
    return (e[i] + e[j], sum(e) - e[i] - e[j])


def _from_split(ring, parts: dict, st) -> Polynomial:
    i, j = st
    acc = ring.zero()
    for (a, b), c in parts.items():
        exp = [0] * ring.nvars
        exp[i], exp[j] = a, b
        acc = acc + c.shift(exp)
    return acc


def _st_only(u: Polynomial, st) -> dict:
    parts = _split(u, st)
    if any(not c.is_constant() for c in parts.values()):
        raise ValueError("u and v must be forms in s and t only")
    return {k: c.constant_value() for k, c in parts.items()}


def _cofactors_monomial(f, u, v, st):
    """f = a u + b v for monomials u, v: each term goes to the generator
    dividing it, the one of larger degree when both do (u on ties)."""
    (ue,), (ve,) = u.keys(), v.keys()
    uc, vc = u[ue], v[ve]
    a, b = {}, {}
    for (x, y), c in _split(f, st).items():
        du = x >= ue[0] and y >= ue[1]
        dv = x >= ve[0] and y >= ve[1]
        if du and dv:
            du = sum(ue) >= sum(ve)
        if du:
            key = (x - ue[0], y - ue[1])
            a[key] = a.get(key, 0) + c / uc if key in a else c / uc
        elif dv:
            key = (x - ve[0], y - ve[1])
            b[key] = b.get(key, 0) + c / vc if key in b else c / vc
        else:
            raise ValueError("form is not in the ideal (u, v)")
    return a, b


def _cofactors_linear(f, u, v, st):
    """f = a u + b v solved over k with T-polynomial right-hand sides."""
    parts = _split(f, st)
    if not parts:
        return {}, {}
    deg = sum(next(iter(parts)))
    du, dv = sum(next(iter(u))), sum(next(iter(v)))
    ua = _binary_monomials(deg - du) if deg >= du else []
    vb = _binary_monomials(deg - dv) if deg >= dv else []
    rows = _binary_monomials(deg)
    ridx = {e: i for i, e in enumerate(rows)}
    ncol = len(ua) + len(vb)
    M = [[Fraction(0)] * ncol for _ in rows]
    for j, m in enumerate(ua):
        for e, c in u.items():
            M[ridx[(m[0] + e[0], m[1] + e[1])]][j] += c
    for j, m in enumerate(vb):
        for e, c in v.items():
            M[ridx[(m[0] + e[0], m[1] + e[1])]][len(ua) + j] += c
    # row-reduce [M | I] to track the combination of right-hand sides
    aug = [M[i] + [Fraction(int(i == k)) for k in range(len(rows))] for i in range(len(rows))]
    R, piv = rref(aug)
    ring = f.ring
    zero = ring.zero()
    rhs = [parts.get(e, zero) for e in rows]
    sol = [zero] * ncol
    for row, pc in zip(R, piv):
        val = zero
        for k, x in enumerate(row[ncol:]):
            if x:
                val = val + rhs[k].scale(x)
        if pc >= ncol:
            if not val.is_zero():
                raise ValueError("form is not in the ideal (u, v)")
            continue
        sol[pc] = val
    # rows of zeros in M part that rref dropped are covered by pivots >= ncol
    a = {m: sol[j] for j, m in enumerate(ua) if not sol[j].is_zero()}
    b = {m: sol[len(ua) + j] for j, m in enumerate(vb) if not sol[len(ua) + j].is_zero()}
    check = _from_split(ring, a, st) * _from_split(ring, {e: ring.const(c) for e, c in u.items()}, st) \
        + _from_split(ring, b, st) * _from_split(ring, {e: ring.const(c) for e, c in v.items()}, st)
    if check != f:
        raise ValueError("form is not in the ideal (u, v)")
    return a, b


def _fmt_st(p: dict, names) -> str:
    ring = PolyRing(tuple(names))
    return str(Polynomial(ring, dict(p)))


def basic_sylvester(f: Polynomial, g: Polynomial, u: Polynomial, v: Polynomial,
                    st: Sequence[str] | None = None) -> SylvesterForm:
    """det of A where [f; g] = A [u; v], u and v forms in s, t."""
    if f.ring.names != g.ring.names:
        raise ValueError("f and g live in different rings")
    ring = f.ring
    idx = _st_indices(ring, st)
    u = u.to_ring(ring) if u.ring.names != ring.names else u
    v = v.to_ring(ring) if v.ring.names != ring.names else v
    uu, vv = _st_only(u, idx), _st_only(v, idx)
    if not uu or not vv:
        raise ValueError("u and v must be nonzero")
    if len(uu) == 1 and len(vv) == 1:
        solve = _cofactors_monomial
    else:
        solve = _cofactors_linear
    rows = []
    for p in (f, g):
        a, b = solve(p, uu, vv, idx)
        rows.append((_from_split(ring, a, idx), _from_split(ring, b, idx)))
    (a1, b1), (a2, b2) = rows
    h = a1 * b2 - b1 * a2
    names = (ring.names[idx[0]], ring.names[idx[1]])
    prov = f"det(f,g)_({_fmt_st(uu, names)}, {_fmt_st(vv, names)})"
    return SylvesterForm(h, _bidegree(h, idx), prov)


# ---------------------------------------------------------------------------
# elimination equations


@dataclass(frozen=True)
class EliminationResult:
    D: Polynomial                # raw determinant / last chain element
    F: Polynomial                # substitution-vanishing reduced equation
    k: int
    c: Fraction                  # D = c F^k
    edeg: int
    birational: bool
    scheme: str
    forms: tuple[SylvesterForm, ...] = field(default=())

    def to_json(self):
        return {
            "scheme": self.scheme, "D": str(self.D), "F": str(self.F), "k": self.k,
            "c": str(self.c), "edeg": self.edeg, "birational": self.birational,
            "forms": [f.to_json() for f in self.forms],
            "irreducibility": "not verified",
        }


def _t_ring(P: Parametrization) -> tuple[PolyRing, list[int]]:
    B = P.biform_ring
    return B, [B.index(n) for n in T_NAMES]


def _package(P: Parametrization, D: Polynomial, forms, scheme: str) -> EliminationResult:
    if D.is_zero():
        raise SchemeNotCovered("determinant vanishes: the content hypothesis fails")
    idx = _st_indices(P.biform_ring, None)
    if _bidegree(D, idx)[0] != 0:
        raise AssertionError("determinant still involves s, t")
    if not D.is_homogeneous() or D.degree() != P.n:
        raise AssertionError(f"determinant has T-degree {D.degree()}, expected {P.n}")
    for sf in forms:
        if not P.vanishes(sf.form):
            raise AssertionError(f"{sf.provenance} does not vanish on the parametrization")
    F = resultant_oracle(P)
    k, rest = 0, D
    while True:
        q, r = rest.divmod(F)
        if not r.is_zero():
            break
        rest, k = q, k + 1
    if k == 0 or not rest.is_constant():
        raise AssertionError("determinant is not a power of the elimination equation")
    edeg = F.degree()
    return EliminationResult(D, F, k, rest.constant_value(), edeg, edeg == P.n, scheme, tuple(forms))


def elimination_chain_mu1(P: Parametrization, mb: MuBasis | None = None) -> EliminationResult:
    """h1 = det(f,g)_(s,t), h_{i+1} = det(f,h_i)_(s,t) down to an s,t-free form."""
    mb = mb or mu_basis(P)
    if mb.mu != 1:
        raise SchemeNotCovered(f"the chain needs mu = 1, got mu = {mb.mu}")
    f, g = mb.biforms(P)
    B = P.biform_ring
    s, t = B.var(0), B.var(1)
    idx = (0, 1)
    forms = []
    h = basic_sylvester(f, g, s, t, B.names[:2])
    forms.append(SylvesterForm(h.form, h.bidegree, "h1 = " + h.provenance))
    while _bidegree(h.form, idx)[0] > 0:
        h = basic_sylvester(f, h.form, s, t, B.names[:2])
        forms.append(SylvesterForm(h.form, h.bidegree,
                                   f"h{len(forms) + 1} = det(f,h{len(forms)})_(s, t)"))
    return _package(P, forms[-1].form, forms, "mu=1 chain")


def balanced_determinant(f: Polynomial, g: Polynomial, p: int,
                         st: Sequence[str] | None = None):
    """Determinant of the balanced (deg f = deg g = p) or odd
    (deg f = p, deg g = p + 1) scheme; returns (D, forms, A)."""
    ring = f.ring
    idx = _st_indices(ring, st)
    names = (ring.names[idx[0]], ring.names[idx[1]])
    s, t = ring.var(idx[0]), ring.var(idx[1])
    df, dg = _bidegree(f, idx)[0], _bidegree(g, idx)[0]
    if df != p or dg not in (p, p + 1):
        raise SchemeNotCovered(f"degrees ({df}, {dg}) do not fit the scheme for p = {p}")
    odd = dg == p + 1
    forms = []
    for i in range(1, p + 1):
        sf = basic_sylvester(f, g, s ** i, t ** (p + 1 - i), names)
        forms.append(SylvesterForm(sf.form, sf.bidegree, f"h{i} = " + sf.provenance))
    cols = ([f] if odd else []) + [sf.form for sf in forms]
    deg = p if odd else p - 1
    basis = _binary_monomials(deg)
    zero = ring.zero()
    A = [[_split(c, idx).get(e, zero) for c in cols] for e in basis]
    D = bareiss_det(A, zero, ring.one())
    return D, forms, A


def balanced_scheme(P: Parametrization, mb: MuBasis | None = None) -> EliminationResult:
    mb = mb or mu_basis(P)
    n = P.n
    p = n // 2
    if mb.mu != p:
        raise SchemeNotCovered(f"balanced scheme needs mu = {p}, got mu = {mb.mu}")
    f, g = mb.biforms(P)
    D, forms, _ = balanced_determinant(f, g, p, P.biform_ring.names[:2])
    return _package(P, D, forms, "odd" if n % 2 else "balanced")


def implicitize(P: Parametrization) -> EliminationResult:
    """Pick the scheme matching mu; anything else is reported, not improvised."""
    mb = mu_basis(P)
    if mb.mu == 0:
        raise SchemeNotCovered("scheme not covered: mu = 0, the forms are linearly "
                               "dependent and the image is a line")
    if mb.mu == 1:
        return elimination_chain_mu1(P, mb)
    if mb.mu == P.n // 2:
        return balanced_scheme(P, mb)
    raise SchemeNotCovered(f"scheme not covered: mu = {mb.mu}, n = {P.n}")


# ---------------------------------------------------------------------------
# resultant oracle


def perfect_power_root(p: Polynomial) -> tuple[Fraction, Polynomial, int]:
    """(c, F, k) with p = c F^k, k maximal, F primitive."""
    if p.is_zero() or p.is_constant():
        raise ValueError("need a non-constant polynomial")
    q = p.monic()
    lead = q.lead_exp()
    g = 0
    import math

    for x in lead:
        g = math.gcd(g, x)
    for k in sorted((k for k in range(1, g + 1) if g % k == 0), reverse=True):
        F = _kth_root(q, k)
        if F is not None:
            F = F.primitive()
            c = p.lead_coeff() / (F ** k).lead_coeff()
            return c, F, k
    raise AssertionError("unreachable: k = 1 always succeeds")


def _kth_root(q: Polynomial, k: int) -> Polynomial | None:
    ring = q.ring
    if k == 1:
        return q
    e = tuple(x // k for x in q.lead_exp())
    F = ring.monomial(e)
    key = ring.key
    lead_key = key(e)
    base = F ** (k - 1)
    for _ in range(len(q.terms) * 4 + 10):
        R = q - F ** k
        if R.is_zero():
            return F
        lt = R.lead_exp()
        be = base.lead_exp()
        m = tuple(a - b for a, b in zip(lt, be))
        if any(x < 0 for x in m) or key(m) >= lead_key:
            return None
        F = F + ring.monomial(m, R.lead_coeff() / k)
    return None


def _sylvester_matrix(a: list, b: list):
    """Sylvester matrix of two polynomials given by coefficient lists
    (constant term first) of formal degrees len-1."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = a[0] - a[0]
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant_oracle(P: Parametrization) -> Polynomial:
    """Res_t(T1 f2 - T2 f1, T1 f3 - T3 f1) at s = 1, T1-content removed,
    reduced to its root: an independent route to the elimination equation."""
    B, (i1, i2, i3) = _t_ring(P)
    T1, T2, T3 = (B.var(i) for i in (i1, i2, i3))
    f1, f2, f3 = (P.lift(f) for f in P.forms)
    G1 = T1 * f2 - T2 * f1
    G2 = T1 * f3 - T3 * f1
    n = P.n
    zero = B.zero()

    def coeffs(G):
        parts = _split(G, (0, 1))
        # coefficient of t^j (s set to 1), j = 0..n
        return [parts.get((n - j, j), zero) for j in range(n + 1)]

    res = bareiss_det(_sylvester_matrix(coeffs(G1), coeffs(G2)), zero, B.one())
    if res.is_zero():
        raise DegenerateParametrization("resultant vanishes identically")
    # strip the T1 content
    k1 = min(e[i1] for e in res.terms)
    if k1:
        strip = [0] * B.nvars
        strip[i1] = k1
        res = Polynomial(B, {tuple(x - y for x, y in zip(e, strip)): c
                             for e, c in res.terms.items()}, False)
    if res.is_constant():
        raise DegenerateParametrization("resultant is a power of T1")
    _, F, _ = perfect_power_root(res)
    if not P.vanishes(F):
        raise AssertionError("resultant root does not vanish on the parametrization")
    return F


# ---------------------------------------------------------------------------
# secondary elimination degree


def secondary_elimination_degree(J: Ideal, a: Polynomial) -> tuple[int, tuple[int, ...]]:
    """r = 1 + socle degree of R/(J:a) for a complete intersection J of
    forms; returns (r, Hilbert function of R/(J:a))."""
    ring = J.ring
    if len(J.gens) != ring.nvars or not artinian_length(J).finite:
        raise ValueError("J is not a regular sequence of length dim R")
    if not J.is_homogeneous() or not a.is_homogeneous():
        raise ValueError("J and a must be homogeneous")
    if J.contains(a):
        raise ValueError("a lies in J, so J:a is the unit ideal")
    Q = colon(J, Ideal(ring, [a]))
    sc = artinian_length(Q)
    eps = socle_degree(Q)
    return eps + 1, sc.per_degree


def secondary_elim_degree(P: Parametrization) -> int:
    """Use the first pair of forms that is a regular sequence as J."""
    for i, j in itertools.combinations(range(3), 2):
        J = Ideal(P.ring, [P.forms[i], P.forms[j]])
        if len(J.gens) == 2 and artinian_length(J).finite:
            k = 3 - i - j
            return secondary_elimination_degree(J, P.forms[k])[0]
    raise ValueError("no two of the forms form a regular sequence")
