"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients, tied to a :class:`PolyRing` that fixes the variable names,
their weights and the active term order.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "TermOrder",
    "PolyRing",
    "Polynomial",
    "PolySyntaxError",
    "RingMismatchError",
    "NotDivisibleError",
    "parse_polynomial",
    "poly_arith",
    "substitute",
    "graded_component_basis",
    "monomials_of_degree",
]


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class RingMismatchError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class TermOrder:
    """A monomial order.

    ``kind`` is one of ``grevlex``, ``lex``, ``deglex`` or ``elim``.  For
    ``elim`` the variables are split into consecutive ``blocks``; blocks are
    compared left to right, each by weighted grevlex.
    """

    kind: str = "grevlex"
    blocks: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "deglex", "elim"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "elim" and not self.blocks:
            raise ValueError("elimination order needs block sizes")

    def key_function(self, weights: Sequence[int]):
        """Return ``key(exp)`` such that larger keys are larger monomials."""
        w = tuple(weights)
        n = len(w)
        unit = all(x == 1 for x in w)

        def wdeg(e, lo=0, hi=n):
            if unit:
                return sum(e[lo:hi])
            return sum(w[i] * e[i] for i in range(lo, hi))

        if self.kind == "lex":
            return tuple
        if self.kind == "deglex":
            return lambda e: (wdeg(e), e)
        if self.kind == "grevlex":
            return lambda e: (wdeg(e), tuple(-x for x in reversed(e)))
        if sum(self.blocks) != n:
            raise ValueError("block sizes do not cover the variables")
        cuts = list(itertools.accumulate((0,) + self.blocks))
        spans = list(zip(cuts, cuts[1:]))

        def elim(e):
            out = []
            for lo, hi in spans:
                out.append(wdeg(e, lo, hi))
                out.append(tuple(-x for x in reversed(e[lo:hi])))
            return tuple(out)

        return elim

    @classmethod
    def parse(cls, text: str) -> "TermOrder":
        return cls(text)


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")
DEGLEX = TermOrder("deglex")


# ---------------------------------------------------------------------------
# rings

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]
    weights: tuple[int, ...] = ()
    order: TermOrder = GREVLEX
    characteristic: int = 0
    _key: object = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for nm in names:
            if not _IDENT.match(nm):
                raise ValueError(f"bad variable name {nm!r}")
        weights = tuple(self.weights) or (1,) * len(names)
        if len(weights) != len(names) or any(w < 1 for w in weights):
            raise ValueError("weights must be positive, one per variable")
        if self.characteristic:
            raise NotImplementedError(
                "prime-field coefficients are not supported; results are exact over QQ"
            )
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_key", self.order.key_function(weights))

    @classmethod
    def from_names(cls, names: str | Iterable[str], order="grevlex", weights=()):
        if isinstance(names, str):
            names = [n.strip() for n in names.replace(" ", ",").split(",") if n.strip()]
        if isinstance(order, str):
            order = TermOrder(order)
        return cls(tuple(names), tuple(weights), order)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def key(self):
        return self._key

    def with_order(self, order: TermOrder | str) -> "PolyRing":
        if isinstance(order, str):
            order = TermOrder(order)
        if order == self.order:
            return self
        return PolyRing(self.names, self.weights, order, self.characteristic)

    def degree_of(self, exp: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    # constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != self.nvars or any(e < 0 for e in exp):
            raise ValueError(f"bad exponent vector {exp}")
        c = Fraction(coeff)
        return Polynomial(self, {exp: c} if c else {})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def __call__(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def __str__(self):
        return "QQ[" + ",".join(self.names) + "]"


# ---------------------------------------------------------------------------
# polynomials


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_monomial(names, exp) -> str:
    parts = []
    for nm, e in zip(names, exp):
        if e == 1:
            parts.append(nm)
        elif e:
            parts.append(f"{nm}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("ring", "terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: dict, _clean: bool = True):
        self.ring = ring
        if _clean:
            terms = {e: Fraction(c) for e, c in terms.items() if c}
        self.terms = terms
        self._sorted = None
        self._hash = None

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending term order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def monomials(self):
        return [e for e, _ in self.sorted_terms()]

    def coefficients(self):
        return [c for _, c in self.sorted_terms()]

    def lead_exp(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=self.ring.key)

    def lead_coeff(self) -> Fraction:
        return self.terms[self.lead_exp()]

    def lead_term(self) -> "Polynomial":
        e = self.lead_exp()
        return Polynomial(self.ring, {e: self.terms[e]}, False)

    def coeff(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def is_constant(self) -> bool:
        z = (0,) * self.ring.nvars
        return all(e == z for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        """Weighted total degree (-1 for zero)."""
        if not self.terms:
            return -1
        return max(self.ring.degree_of(e) for e in self.terms)

    def degree_in(self, var) -> int:
        i = var if isinstance(var, int) else self.ring.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.ring.degree_of(e) for e in self.terms}) <= 1

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            out.setdefault(self.ring.degree_of(e), {})[e] = c
        return {d: Polynomial(self.ring, t, False) for d, t in out.items()}

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.lead_coeff()
        if lc == 1:
            return self
        return Polynomial(self.ring, {e: c / lc for e, c in self.terms.items()}, False)

    def primitive(self) -> "Polynomial":
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, (c * den).numerator)
        scale = Fraction(den, num)
        if self.lead_coeff() < 0:
            scale = -scale
        return self.scale(scale)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()}, False)

    def shift(self, exp, c=1) -> "Polynomial":
        """Multiply by the term ``c * x^exp``."""
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self.terms.items()},
            False,
        )

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring.names != self.ring.names or other.ring.weights != self.ring.weights:
                raise RingMismatchError(f"{other.ring} vs {self.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Polynomial(self.ring, t, False)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()}, False)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return Polynomial(self.ring, t, False)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        return self.exact_div(other)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Division by one polynomial in the ring's term order."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        key = self.ring.key
        lead = other.lead_exp()
        lc = other.terms[lead]
        rest = [(e, c) for e, c in other.terms.items() if e != lead]
        rem = dict(self.terms)
        quo: dict = {}
        out: dict = {}
        while rem:
            e = max(rem, key=key)
            c = rem.pop(e)
            d = tuple(a - b for a, b in zip(e, lead))
            if min(d) < 0:
                out[e] = c
                continue
            q = c / lc
            quo[d] = quo.get(d, 0) + q
            for e2, c2 in rest:
                m = tuple(a + b for a, b in zip(e2, d))
                v = rem.get(m, 0) - q * c2
                if v:
                    rem[m] = v
                else:
                    rem.pop(m, None)
        return Polynomial(self.ring, quo), Polynomial(self.ring, out, False)

    def exact_div(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self / other
        q, r = self.divmod(other)
        if r:
            raise NotDivisibleError("division is not exact")
        return q

    def divides(self, other: "Polynomial") -> bool:
        return not other.divmod(self)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # evaluation / substitution

    def derivative(self, var) -> "Polynomial":
        i = var if isinstance(var, int) else self.ring.index(var)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return Polynomial(self.ring, t, False)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        return substitute(self, images)

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def to_ring(self, ring: PolyRing, mapping: Sequence[int] | None = None) -> "Polynomial":
        """Re-embed into ``ring``; ``mapping[i]`` is the target index of variable ``i``.

        Without a mapping variables are matched by name.
        """
        if mapping is None:
            mapping = [ring.index(n) for n in self.ring.names]
        t = {}
        n = ring.nvars
        for e, c in self.terms.items():
            e2 = [0] * n
            for i, k in enumerate(e):
                if k:
                    e2[mapping[i]] += k
            t[tuple(e2)] = c
        return Polynomial(ring, t, False)

    # printing

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = _fmt_monomial(names, e)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
            else:
                body = _fmt_coeff(a)
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        toks.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value:
            raise PolySyntaxError(f"expected {value!r}", t[2])
        return t

    def parse(self):
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty expression", 0)
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"unexpected {t[1]!r}", t[2])
        return p

    def expr(self):
        sign = 1
        t = self.peek()
        if t[1] in "+-" and t[0] == "op":
            self.take()
            sign = -1 if t[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in ("+", "-"):
                self.take()
                q = self.term()
                p = p + q if t[1] == "+" else p - q
            else:
                return p

    def term(self):
        p = self.power()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                p = p * self.power()
            elif t[0] == "op" and t[1] == "/":
                self.take()
                q = self.power()
                if not q.is_constant():
                    raise PolySyntaxError("division only by nonzero constants", t[2])
                c = q.constant_value()
                if not c:
                    raise PolySyntaxError("division by zero", t[2])
                p = p.scale(1 / c)
            else:
                return p

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise PolySyntaxError("exponent must be a natural number", e[2])
            return base ** int(e[1])
        return base

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "num":
            return self.ring.const(int(val))
        if kind == "name":
            if val not in self.ring.names:
                raise PolySyntaxError(f"unknown variable {val!r}", pos)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "op" and val == "-":
            return -self.power()
        raise PolySyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse ``text`` such as ``"x^2*y - 3/2*z"`` into a polynomial of ``ring``."""
    return _Parser(ring, text).parse()


# ---------------------------------------------------------------------------
# functional interface


def poly_arith(op: str, a: Polynomial, b) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        n = b if isinstance(b, int) else int(b.constant_value())
        return a ** n
    if op == "exact_div":
        return a.exact_div(b)
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Apply the ring map sending the i-th variable of ``p.ring`` to ``images[i]``."""
    if len(images) != p.ring.nvars:
        raise ValueError(f"expected {p.ring.nvars} images, got {len(images)}")
    target = images[0].ring
    for im in images[1:]:
        if im.ring.names != target.names:
            raise RingMismatchError("images live in different rings")
    powers: dict[tuple[int, int], Polynomial] = {}

    def pw(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = images[i] ** k
        return powers[(i, k)]

    acc: dict = {}
    for e, c in p.terms.items():
        term = target.const(c)
        for i, k in enumerate(e):
            if k:
                term = term * pw(i, k)
        for m, v in term.terms.items():
            s = acc.get(m, 0) + v
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return Polynomial(target, acc, False)


def monomials_of_degree(weights: Sequence[int], degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of weighted degree ``degree``."""
    weights = tuple(weights)
    n = len(weights)
    out = []

    def rec(i, left, acc):
        if i == n - 1:
            if left % weights[i] == 0:
                out.append(tuple(acc + [left // weights[i]]))
            return
        for k in range(left // weights[i], -1, -1):
            rec(i + 1, left - k * weights[i], acc + [k])

    if degree < 0:
        return []
    rec(0, degree, [])
    return out


def graded_component_basis(ring: PolyRing, degree: int) -> list[tuple[int, ...]]:
    """Monomials of weighted degree ``degree``, descending in the ring's order."""
    mons = monomials_of_degree(ring.weights, degree)
    mons.sort(key=ring.key, reverse=True)
    return mons
