"""Integral closure of monomial ideals through their Newton polyhedra."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .groebner import NotArtinianError
from .hilbert import HilbertCoefficients, fit_filtration, samuel_fit
from .monomial import MonomialIdeal

__all__ = [
    "NewtonPolyhedron",
    "NormalizationReport",
    "VolumeEstimate",
    "fourier_motzkin",
    "newton_membership",
    "integral_closure_power",
    "closure_colength",
    "normalization_indices",
    "bar_coefficients",
    "birational_test",
    "birational_e1_target",
    "volume_multiplicity",
    "auto_window_fit",
]


# ---------------------------------------------------------------------------
# Fourier-Motzkin


def _normalize(coeffs: tuple, const):
    """Scale a >= 0 inequality to coprime integers."""
    vals = [Fraction(c) for c in coeffs] + [Fraction(const)]
    den = 1
    for v in vals:
        den = math.lcm(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints[:-1]), ints[-1]


def fourier_motzkin(ineqs, eliminate: Sequence[int]):
    """Eliminate variables from a system of ``c·x + c0 >= 0`` inequalities.

    ``ineqs`` is a list of ``(coeff_tuple, const)``.  Returns the projected
    system on the remaining coordinates (same indexing, eliminated
    coefficients are zero).
    """
    system = {_normalize(c, k) for c, k in ineqs}
    for v in eliminate:
        pos, neg, rest = [], [], []
        for c, k in system:
            (pos if c[v] > 0 else neg if c[v] < 0 else rest).append((c, k))
        new = set(rest)
        for cp, kp in pos:
            for cn, kn in neg:
                a, b = -cn[v], cp[v]
                c = tuple(a * x + b * y for x, y in zip(cp, cn))
                new.add(_normalize(c, a * kp + b * kn))
        system = _prune(new)
    return sorted(system)


def _prune(system):
    out = {}
    for c, k in system:
        if not any(c):
            if k < 0:
                raise ValueError("infeasible system")
            continue
        # same normal, keep the strongest constant (smallest c0)
        if c not in out or k < out[c]:
            out[c] = k
    return set(out.items())


# ---------------------------------------------------------------------------
# Newton polyhedra


@dataclass(frozen=True)
class NewtonPolyhedron:
    """conv(V) + R^n_{>=0} for the generator exponents V."""

    vertices: tuple[tuple[int, ...], ...]
    dim: int

    @classmethod
    def of(cls, I: MonomialIdeal) -> "NewtonPolyhedron":
        if I.is_zero():
            raise ValueError("the zero ideal has no Newton polyhedron")
        return cls(tuple(I.gens), I.nvars)

    @cached_property
    def inequalities(self) -> list[tuple[tuple[int, ...], int]]:
        """Facet description as pairs ``(a, b)`` meaning ``a·u >= b``."""
        V = self.vertices
        n, k = self.dim, len(V)
        # variables: u_0..u_{n-1}, r_0..r_{k-2}; r_{k-1} = 1 - sum(r)
        nv = n + k - 1
        rows = []
        last = V[-1]
        for j in range(n):
            c = [0] * nv
            c[j] = 1
            for i in range(k - 1):
                c[n + i] = last[j] - V[i][j]
            rows.append((tuple(c), -last[j]))
        for i in range(k - 1):
            c = [0] * nv
            c[n + i] = 1
            rows.append((tuple(c), 0))
        c = [0] * nv
        for i in range(k - 1):
            c[n + i] = -1
        rows.append((tuple(c), 1))
        proj = fourier_motzkin(rows, range(n, nv))
        out = []
        for c, k0 in proj:
            a = tuple(c[:n])
            if any(x < 0 for x in a):
                raise AssertionError("Newton polyhedron facet with a negative normal")
            if -k0 > 0:
                out.append((a, -k0))
        return sorted(set(out))

    def contains(self, w: Sequence, m: int = 1) -> bool:
        return all(sum(x * y for x, y in zip(a, w)) >= m * b for a, b in self.inequalities)

    def membership_array(self, points: np.ndarray, m: int) -> np.ndarray:
        ok = np.ones(points.shape[0], dtype=bool)
        for a, b in self.inequalities:
            ok &= points @ np.array(a, dtype=np.int64) >= m * b
        return ok


def newton_membership(w: Sequence[int], m: int, P: NewtonPolyhedron) -> bool:
    """Is x^w integral over I^m, i.e. w ∈ m·conv(V) + R^n_{>=0}?"""
    if len(w) != P.dim:
        raise ValueError("exponent length does not match the polyhedron")
    if m == 0:
        return True
    return P.contains(w, m)


def _box_members(P: NewtonPolyhedron, m: int, bounds: Sequence[int]):
    shape = tuple(b + 1 for b in bounds)
    grid = np.indices(shape, dtype=np.int64).reshape(len(shape), -1).T
    member = P.membership_array(grid, m).reshape(shape)
    return grid, member


def integral_closure_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """Minimal generators of the integral closure of I^m."""
    if m < 1:
        raise ValueError("power must be >= 1")
    P = NewtonPolyhedron.of(I)
    n = I.nvars
    bounds = [m * x for x in I.max_exponents()]
    grid, member = _box_members(P, m, bounds)
    minimal = member.copy()
    for i in range(n):
        # w is not minimal if w - e_i is a member
        sl_hi = [slice(None)] * n
        sl_lo = [slice(None)] * n
        sl_hi[i] = slice(1, None)
        sl_lo[i] = slice(None, -1)
        minimal[tuple(sl_hi)] &= ~member[tuple(sl_lo)]
    idx = np.argwhere(minimal)
    return MonomialIdeal(I.ring, [tuple(int(x) for x in row) for row in idx])


def closure_colength(I: MonomialIdeal, m: int) -> int:
    """λ(R / closure(I^m)) for m-primary I."""
    if not I.is_m_primary():
        raise NotArtinianError("closure colength needs an m-primary ideal")
    if m == 0:
        return 0
    P = NewtonPolyhedron.of(I)
    bounds = [m * x for x in I.max_exponents()]
    _, member = _box_members(P, m, bounds)
    return int(member.size - member.sum())


# ---------------------------------------------------------------------------
# normalization indices


@dataclass(frozen=True)
class NormalizationReport:
    s0: int | None
    s: int | None
    verified_up_to: int
    closures: tuple[MonomialIdeal, ...]  # closure(I^n) for n = 1..N

    def to_json(self):
        return {
            "s0": self.s0,
            "s": self.s,
            "verified_up_to": self.verified_up_to,
            "closures": [[str(p) for p in c.polys()] for c in self.closures],
        }


def normalization_indices(I: MonomialIdeal, N: int) -> NormalizationReport:
    """Generation index s0 and stabilisation index s of the closure filtration,
    checked for powers up to N."""
    if N < 2:
        raise ValueError("N must be at least 2")
    ring = I.ring
    unit = MonomialIdeal(ring, [(0,) * I.nvars])
    C = [unit] + [integral_closure_power(I, n) for n in range(1, N + 1)]
    # s: C_{n+1} = I*C_n for every s <= n <= N-1
    s = None
    for cand in range(N):
        if all(C[n + 1] == I * C[n] for n in range(cand, N)):
            s = cand
            break
    # s0: the algebra sum C_n t^n is generated in degrees <= s0 (checked to N)
    s0 = None
    for cand in range(1, N + 1):
        ok = True
        for n in range(cand + 1, N + 1):
            gen = None
            for i in range(1, cand + 1):
                part = C[i] * C[n - i]
                gen = part if gen is None else gen + part
            if gen != C[n]:
                ok = False
                break
        if ok:
            s0 = cand
            break
    return NormalizationReport(s0, s, N, tuple(C[1:]))


# ---------------------------------------------------------------------------
# coefficients of the closure filtration


def auto_window_fit(colength, d: int, start: int = 0, limit: int = 12,
                    source: str = "samuel-fit") -> HilbertCoefficients:
    """Smallest window b >= start where windows b and b+1 agree."""
    from .hilbert import WindowDisagreement

    last = None
    for b in range(start, limit + 1):
        try:
            return fit_filtration(colength, d, b, source)[0]
        except WindowDisagreement as exc:
            last = exc
    raise last


def bar_coefficients(I: MonomialIdeal, b: int | None = None) -> HilbertCoefficients:
    """Coefficients ē_i of the filtration by closures of powers of I."""
    if not I.is_m_primary():
        raise NotArtinianError("bar_coefficients needs an m-primary ideal")
    d = I.nvars

    def colength(n):
        return closure_colength(I, n)

    if b is None:
        return auto_window_fit(colength, d, source="closure-fit")
    return fit_filtration(colength, d, b, "closure-fit")[0]


def birational_e1_target(d: int, n: int) -> Fraction:
    return Fraction((d - 1) * (n ** d - n ** (d - 1)), 2)


def birational_test(I: MonomialIdeal, n: int, b: int | None = None) -> tuple[bool, int]:
    """Compare e1(I) with (d-1)(n^d - n^(d-1))/2; returns (verdict, e1)."""
    degs = set(I.degrees())
    if len(degs) != 1:
        raise ValueError("generators of mixed degrees")
    if degs != {n}:
        raise ValueError(f"generators have degree {degs.pop()}, not {n}")
    if not I.is_m_primary():
        raise NotArtinianError("birational_test needs an m-primary ideal")
    e = _fit_e(I, b)
    d = I.nvars
    return e[1] == birational_e1_target(d, n), e[1]


def _fit_e(I: MonomialIdeal, b: int | None):
    from .hilbert import _monomial_colength

    d = I.nvars
    if b is not None:
        return samuel_fit(I.to_ideal(), b)
    return auto_window_fit(lambda k: _monomial_colength(I ** k), d)


@dataclass(frozen=True)
class VolumeEstimate:
    estimate: Fraction
    e0: int
    refinement: int
    colength: int

    @property
    def relative_error(self) -> Fraction:
        return abs(self.estimate - self.e0) / self.e0

    def to_json(self):
        return {
            "estimate": str(self.estimate), "estimate_float": float(self.estimate),
            "e0": self.e0, "refinement": self.refinement, "colength": self.colength,
            "relative_error": float(self.relative_error),
        }


def volume_multiplicity(I: MonomialIdeal, refinement: int, b: int | None = None) -> VolumeEstimate:
    """n!·λ(R/closure(I^m))/m^n at m = refinement, next to the exact e0."""
    if not I.is_m_primary():
        raise NotArtinianError("volume_multiplicity needs an m-primary ideal")
    n = I.nvars
    m = refinement
    col = closure_colength(I, m)
    est = Fraction(math.factorial(n) * col, m ** n)
    e0 = _fit_e(I, b)[0]
    return VolumeEstimate(est, e0, m, col)
