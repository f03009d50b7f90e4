"""Monomial ideals stored by their minimal generators."""

from __future__ import annotations

from typing import Iterable, Sequence

from .polyring import Polynomial, PolyRing
from .groebner import Ideal, _divides, _lcm, _minimalize

__all__ = ["MonomialIdeal", "NotMonomialError"]


class NotMonomialError(ValueError):
    pass


def _gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


class MonomialIdeal:
    """Monomial ideal with canonical (minimal, sorted) generators.

    ``gens`` holds exponent tuples.  The unit ideal is ``((0,...,0),)`` and the
    zero ideal has no generators.
    """

    __slots__ = ("ring", "gens")

    def __init__(self, ring: PolyRing, gens: Iterable[Sequence[int]] = ()):
        n = ring.nvars
        exps = []
        for g in gens:
            g = tuple(int(x) for x in g)
            if len(g) != n or min(g, default=0) < 0:
                raise ValueError(f"bad exponent vector {g}")
            exps.append(g)
        mins = _minimalize(exps)
        key = ring.key
        self.ring = ring
        self.gens: tuple[tuple[int, ...], ...] = tuple(sorted(mins, key=key, reverse=True))

    # construction

    @classmethod
    def from_polys(cls, ring: PolyRing, polys: Iterable[Polynomial | str]) -> "MonomialIdeal":
        exps = []
        for p in polys:
            if isinstance(p, str):
                p = ring.parse(p)
            if p.is_zero():
                continue
            if not p.is_monomial():
                raise NotMonomialError(f"{p} is not a monomial")
            exps.append(p.lead_exp())
        return cls(ring, exps)

    @classmethod
    def from_ideal(cls, I: Ideal) -> "MonomialIdeal":
        if I.is_monomial():
            return cls.from_polys(I.ring, I.gens)
        raise NotMonomialError("ideal has non-monomial generators")

    @classmethod
    def initial(cls, I: Ideal, order=None) -> "MonomialIdeal":
        gb = I.groebner(order)
        return cls(I.ring, gb.lead_exps())

    def to_ideal(self) -> Ideal:
        return Ideal(self.ring, [self.ring.monomial(e) for e in self.gens])

    def polys(self) -> list[Polynomial]:
        return [self.ring.monomial(e) for e in self.gens]

    # queries

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def contains(self, exp: Sequence[int]) -> bool:
        exp = tuple(exp)
        return any(_divides(g, exp) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def is_squarefree(self) -> bool:
        return all(max(g, default=0) <= 1 for g in self.gens)

    def support(self) -> set[int]:
        return {i for g in self.gens for i, x in enumerate(g) if x}

    def degrees(self) -> list[int]:
        return [self.ring.degree_of(g) for g in self.gens]

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(self.nvars))

    def is_pure_power_ideal(self) -> bool:
        return all(sum(1 for x in g if x) <= 1 for g in self.gens)

    def is_m_primary(self) -> bool:
        n = self.nvars
        have = set()
        for g in self.gens:
            nz = [i for i, x in enumerate(g) if x]
            if not nz:
                return True
            if len(nz) == 1:
                have.add(nz[0])
        return len(have) == n

    # operations

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(
            self.ring, [tuple(a + b for a, b in zip(g, h)) for g in self.gens for h in other.gens]
        )

    def __pow__(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative power")
        out = MonomialIdeal(self.ring, [(0,) * self.nvars])
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, [_lcm(g, h) for g in self.gens for h in other.gens])

    def colon_monomial(self, exp: Sequence[int]) -> "MonomialIdeal":
        return MonomialIdeal(
            self.ring, [tuple(max(a - b, 0) for a, b in zip(g, exp)) for g in self.gens]
        )

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        out = None
        for h in other.gens:
            c = self.colon_monomial(h)
            out = c if out is None else out.intersect(c)
        if out is None:
            raise ValueError("colon by the zero ideal")
        return out

    def saturate(self, other: "MonomialIdeal") -> tuple["MonomialIdeal", int]:
        cur = self
        k = 0
        while True:
            nxt = cur.colon(other)
            if nxt == cur:
                return cur, k
            cur = nxt
            k += 1

    def maximal_ideal(self) -> "MonomialIdeal":
        n = self.nvars
        return MonomialIdeal(self.ring, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    def localize(self, variables: Iterable[int]) -> "MonomialIdeal":
        """Set every variable outside ``variables`` to 1 (kept in the same ring)."""
        keep = set(variables)
        return MonomialIdeal(
            self.ring, [tuple(x if i in keep else 0 for i, x in enumerate(g)) for g in self.gens]
        )

    def restrict(self, variables: Sequence[int]) -> "MonomialIdeal":
        """Same ideal viewed in the polynomial ring on ``variables`` only.

        Generators must not involve other variables.
        """
        variables = list(variables)
        sub = PolyRing(tuple(self.ring.names[i] for i in variables),
                       tuple(self.ring.weights[i] for i in variables))
        out = []
        for g in self.gens:
            if any(g[i] for i in range(self.nvars) if i not in variables):
                raise ValueError("generator involves a dropped variable")
            out.append(tuple(g[i] for i in variables))
        return MonomialIdeal(sub, out)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring.names == other.ring.names and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.gens)))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(p) for p in self.polys()) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"
