"""Reductions, reduction numbers, Sally f-sequences and the Huckaba test."""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import Ideal, NotArtinianError, artinian_length, ideal_power
from .hilbert import HilbertCoefficients, _PowerCache, fit_filtration, samuel_fit
from .closure import auto_window_fit

__all__ = [
    "NotAReductionError",
    "FSequence",
    "HuckabaReport",
    "ideal_power",
    "reduction_number",
    "f_sequence",
    "huckaba_test",
    "reduction_bound",
    "reduction_bound_check",
    "default_window",
]


class NotAReductionError(ValueError):
    pass


def _colength(I: Ideal) -> int:
    sc = artinian_length(I)
    if not sc.finite:
        raise NotArtinianError("quotient is not Artinian")
    return sc.total


def _check_inside(J: Ideal, I: Ideal):
    gb = I.groebner()
    if not all(gb.contains(g) for g in J.gens):
        raise NotAReductionError("J is not contained in I")


def reduction_number(J: Ideal, I: Ideal, maxr: int, _powers=None) -> int | None:
    """Least r <= maxr with I^(r+1) = J I^r, or None."""
    _check_inside(J, I)
    powers = _powers or _PowerCache(I, None)
    for r in range(maxr + 1):
        big = powers.get(r + 1)
        small = J * powers.get(r)
        gb = small.groebner()
        if all(gb.contains(g) for g in big.gens):
            return r
    return None


def reduction_bound(J: Ideal) -> int:
    """d·λ(R/J) - 2d + 1 with d = dim R."""
    d = J.ring.nvars
    return d * _colength(J) - 2 * d + 1


@dataclass(frozen=True)
class FSequence:
    values: tuple[int, ...]          # f_1..f_N
    reduction_number: int | None     # None: not found within N

    @property
    def total(self) -> int:
        return sum(self.values)

    def to_json(self):
        return {"f": list(self.values), "sum": self.total,
                "reduction_number": self.reduction_number}


def f_sequence(I: Ideal, J: Ideal, N: int | None = None, _powers=None) -> FSequence:
    """f_j = λ(I^j / J I^(j-1)) = λ(R/J I^(j-1)) - λ(R/I^j) for j = 1..N."""
    _check_inside(J, I)
    if not artinian_length(I).finite:
        raise NotArtinianError("f_sequence needs an m-primary ideal")
    if N is None:
        N = max(reduction_bound(J), 1)
    powers = _powers or _PowerCache(I, None)
    vals = []
    red = None
    for j in range(1, N + 1):
        f = _colength(J * powers.get(j - 1)) - _colength(powers.get(j))
        vals.append(f)
        if f == 0:
            # I^j = J I^(j-1) propagates to every later power
            red = j - 1
            vals.extend([0] * (N - j))
            break
    return FSequence(tuple(vals), red)


@dataclass(frozen=True)
class HuckabaReport:
    e1: int
    f_total: int
    verdict: str            # "almost-CM", "not almost-CM" or "inconclusive"
    sally_multiplicity: int | None
    coefficients: HilbertCoefficients
    fseq: FSequence
    hypothesis: str = "R = k[x_1..x_d] localised at the irrelevant ideal (Cohen-Macaulay)"

    def to_json(self):
        return {
            "e1": self.e1, "sum_f": self.f_total, "verdict": self.verdict,
            "sally_multiplicity": self.sally_multiplicity,
            "e": self.coefficients.to_json()["e"], "f": list(self.fseq.values),
            "reduction_number": self.fseq.reduction_number,
            "hypothesis": self.hypothesis,
        }


def default_window(I: Ideal, powers=None) -> HilbertCoefficients:
    d = I.ring.nvars
    powers = powers or _PowerCache(I, None)
    return auto_window_fit(lambda n: _colength(powers.get(n)), d)


def huckaba_test(I: Ideal, J: Ideal, N: int | None = None, b: int | None = None) -> HuckabaReport:
    """Compare e1(I) with the sum of the Sally f-sequence of (I, J)."""
    powers = _PowerCache(I, None)
    fs = f_sequence(I, J, N, _powers=powers)
    if b is None:
        coeffs = default_window(I, powers)
    else:
        coeffs = samuel_fit(I, b)
    e1 = coeffs[1]
    if fs.reduction_number is None:
        verdict = "inconclusive"
    elif e1 == fs.total:
        verdict = "almost-CM"
    else:
        if e1 > fs.total:
            raise AssertionError(f"e1 = {e1} exceeds the f-sum {fs.total}")
        verdict = "not almost-CM"
    sally = e1 - fs.values[0]
    return HuckabaReport(e1, fs.total, verdict, sally if sally > 0 else None, coeffs, fs)


def reduction_bound_check(I: Ideal, J: Ideal, maxr: int | None = None) -> tuple[bool, int, int]:
    """Check red_J(I) <= d·λ(R/J) - 2d + 1; returns (holds, r, bound)."""
    bound = reduction_bound(J)
    r = reduction_number(J, I, bound if maxr is None else maxr)
    if r is None:
        raise NotAReductionError("no reduction number found up to the bound")
    return r <= bound, r, bound
