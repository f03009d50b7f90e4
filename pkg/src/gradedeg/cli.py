"""Command-line front end: run small scripts against the library.

A script is a list of statements separated by ``;`` or newlines::

    ring x,y,z
    I = x^2, y^2, z^2, x*y - x*z, x*z - y*z
    coeffs I --window 1

Statements are a ``ring`` declaration (exactly one, before any polynomial),
bindings ``NAME = gen, gen, ...`` (or ``NAME = complex {1,2},{3}``), and
commands ``CMD ARG ... [--flag value]``.  Arguments are bound names or
inline comma lists without spaces.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field

from .closure import (
    auto_window_fit,
    bar_coefficients,
    integral_closure_power,
    normalization_indices,
)
from .filtration import f_sequence, huckaba_test, reduction_number
from .groebner import Ideal, artinian_length
from .hilbert import (
    _PowerCache,
    coefficients_from_series,
    degree_report,
    fit_filtration,
    hilbert_series,
    irreducible_decomposition,
    tracking_number,
)
from .monomial import MonomialIdeal
from .polyring import PolyRing, PolySyntaxError
from .simplicial import SimplicialComplex, fh_vectors, sr_degrees, sr_ideal
from . import sylvester as syl

COMMANDS = (
    "hilbert", "coeffs", "tn", "degrees", "decompose", "closure", "normindex",
    "barcoeffs", "reduction", "fseq", "huckaba", "sr", "mubasis", "implicitize",
    "secelim", "resultant",
)
ORDERS = ("grevlex", "lex", "deglex")
IDENT = re.compile(r"[A-Za-z][A-Za-z0-9]*$")


class ScriptError(ValueError):
    """Parse error carrying a 1-based line and column."""

    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line, self.col = line, col


@dataclass
class Statement:
    kind: str              # "ring", "bind", "command"
    head: str
    body: str
    offset: int            # offset of body in the script
    flags: dict = field(default_factory=dict)
    args: list = field(default_factory=list)


def _linecol(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _split_top(s: str, sep: str = ",") -> list[tuple[str, int]]:
    """Split at separators outside parentheses/braces; keeps offsets."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append((s[start:i], start))
            start = i + 1
    out.append((s[start:], start))
    return out


def parse_script(text: str) -> list[Statement]:
    stmts = []
    for m in re.finditer(r"[^;\n]+", text):
        raw = m.group(0)
        if not raw.strip() or raw.strip().startswith("#"):
            continue
        lead = len(raw) - len(raw.lstrip())
        start = m.start() + lead
        body = raw.strip()
        if "=" in body and not body.startswith(("ring ",)) and body.split("=")[0].strip() \
                and IDENT.match(body.split("=")[0].strip()):
            name, rhs = body.split("=", 1)
            off = start + len(name) + 1 + (len(rhs) - len(rhs.lstrip()))
            stmts.append(Statement("bind", name.strip(), rhs.strip(), off))
            continue
        word = body.split()[0]
        rest = body[len(word):]
        off = start + len(word) + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if word == "ring":
            stmts.append(Statement("ring", word, rest, off))
            continue
        if word not in COMMANDS:
            line, col = _linecol(text, start)
            raise ScriptError(f"unknown command '{word}'", line, col)
        st = Statement("command", word, rest, off)
        toks = rest.split()
        i = 0
        while i < len(toks):
            tok = toks[i]
            if tok.startswith("--"):
                key = tok[2:]
                if key not in ("window", "order", "max"):
                    line, col = _linecol(text, off + rest.find(tok))
                    raise ScriptError(f"unknown flag '{tok}'", line, col)
                if i + 1 >= len(toks):
                    line, col = _linecol(text, off + rest.find(tok))
                    raise ScriptError(f"flag '{tok}' needs a value", line, col)
                st.flags[key] = toks[i + 1]
                i += 2
                continue
            st.args.append((tok, off + rest.find(tok)))
            i += 1
        stmts.append(st)
    return stmts


# ---------------------------------------------------------------------------
# evaluation


class Session:
    def __init__(self, text: str, defaults: dict):
        self.text = text
        self.ring: PolyRing | None = None
        self.bindings: dict = {}
        self.defaults = defaults

    def error(self, msg, offset):
        line, col = _linecol(self.text, offset)
        return ScriptError(msg, line, col)

    def declare_ring(self, st: Statement):
        if self.ring is not None:
            raise self.error("only one ring per script", st.offset)
        names = [n.strip() for n in st.body.split(",")]
        for n in names:
            if not IDENT.match(n):
                raise self.error(f"bad variable name '{n}'", st.offset)
        order = self.defaults.get("order") or "grevlex"
        self.ring = PolyRing.from_names(names, order=order)

    def parse_list(self, body: str, offset: int):
        if self.ring is None:
            raise self.error("declare a ring before using polynomials", offset)
        gens = []
        for piece, off in _split_top(body):
            if not piece.strip():
                raise self.error("empty generator", offset + off)
            try:
                gens.append(self.ring.parse(piece))
            except PolySyntaxError as exc:
                raise self.error(str(exc.args[0]), offset + off + exc.pos) from None
            except ValueError as exc:
                raise self.error(str(exc), offset + off) from None
        return gens

    def bind(self, st: Statement):
        if st.body.startswith("complex"):
            self.bindings[st.head] = parse_complex(st.body[len("complex"):], self, st.offset)
        else:
            self.bindings[st.head] = self.parse_list(st.body, st.offset)

    def value(self, arg):
        tok, off = arg
        if tok in self.bindings:
            return self.bindings[tok]
        if tok.startswith("{"):
            return parse_complex(tok, self, off)
        return self.parse_list(tok, off)


def parse_complex(body: str, sess: Session, offset: int) -> SimplicialComplex:
    facets = []
    for m in re.finditer(r"\{([^}]*)\}", body):
        labels = []
        for x in m.group(1).split(","):
            x = x.strip()
            if not x:
                continue
            labels.append(int(x) if x.isdigit() else x)
        facets.append(labels)
    if not facets:
        raise sess.error("expected facets like {1,2},{3}", offset)
    return SimplicialComplex.from_facets(facets)


def _sorted_gens(polys) -> list[str]:
    return sorted(str(p) for p in polys)


def _ideal(sess: Session, arg) -> Ideal:
    v = sess.value(arg)
    if isinstance(v, SimplicialComplex):
        raise ValueError(f"'{arg[0]}' is a complex, not an ideal")
    return Ideal(sess.ring, v)


def _monomial(sess, arg) -> MonomialIdeal:
    I = _ideal(sess, arg)
    if not I.is_monomial():
        raise ValueError("this command needs a monomial ideal")
    return MonomialIdeal.from_ideal(I)


def _param(sess, arg) -> syl.Parametrization:
    v = sess.value(arg)
    if isinstance(v, SimplicialComplex) or len(v) != 3:
        raise ValueError("a parametrization is a list of three binary forms")
    return syl.Parametrization(sess.ring, v)


def _need(args, k, cmd):
    if len(args) != k:
        raise ValueError(f"{cmd} takes {k} argument(s), got {len(args)}")


def _int_flag(flags, key, default=None):
    v = flags.get(key, default)
    if v is None:
        return None
    try:
        return int(v)
    except (TypeError, ValueError):
        raise ValueError(f"--{key} needs an integer, got '{v}'") from None


def execute(sess: Session, st: Statement) -> tuple[dict, int | None]:
    """Run one command; returns (result, verified_up_to)."""
    cmd, args = st.head, st.args
    flags = dict(sess.defaults)
    flags.update({k: v for k, v in st.flags.items()})
    order = flags.get("order")
    if order is not None and order not in ORDERS:
        raise ValueError(f"unknown order '{order}'")
    window = _int_flag(flags, "window")
    mx = _int_flag(flags, "max")

    if cmd == "hilbert":
        _need(args, 1, cmd)
        H = hilbert_series(_ideal(sess, args[0]), order)
        return {"series": H.to_json(), "text": str(H), "dim": H.dim, "degree": H.degree,
                "a_invariant": H.a_invariant}, None
    if cmd == "coeffs":
        _need(args, 1, cmd)
        I = _ideal(sess, args[0])
        if artinian_length(I).finite:
            powers = _PowerCache(I, order)

            def colength(n):
                return artinian_length(powers.get(n), order).total

            d = sess.ring.nvars
            if window is None:
                co = auto_window_fit(colength, d)
                _, c = fit_filtration(colength, d, co.window)
            else:
                co, c = fit_filtration(colength, d, window)
            out = co.to_json()
            out["lengths"] = c
            return out, None
        H = hilbert_series(I, order)
        return coefficients_from_series(H).to_json(), None
    if cmd == "tn":
        _need(args, 1, cmd)
        return tracking_number(_ideal(sess, args[0]), order).to_json(), None
    if cmd == "degrees":
        _need(args, 1, cmd)
        return degree_report(_monomial(sess, args[0])).to_json(), None
    if cmd == "decompose":
        _need(args, 1, cmd)
        M = _monomial(sess, args[0])
        dec = irreducible_decomposition(M)
        names = M.ring.names
        comps = [_sorted_gens(c.polys()) for c in dec.components]
        mult = {"(" + ",".join(names[i] for i in p) + ")": m
                for p, m in sorted(dec.multiplicities.items())}
        return {"components": comps, "multiplicities": mult}, None
    if cmd == "closure":
        _need(args, 1, cmd)
        m = mx or 1
        C = integral_closure_power(_monomial(sess, args[0]), m)
        return {"power": m, "closure": _sorted_gens(C.polys())}, None
    if cmd == "normindex":
        _need(args, 1, cmd)
        N = mx or 4
        rep = normalization_indices(_monomial(sess, args[0]), N)
        out = rep.to_json()
        out["closures"] = [sorted(c) for c in out["closures"]]
        return out, N
    if cmd == "barcoeffs":
        _need(args, 1, cmd)
        return bar_coefficients(_monomial(sess, args[0]), window).to_json(), None
    if cmd == "reduction":
        _need(args, 2, cmd)
        J, I = _ideal(sess, args[0]), _ideal(sess, args[1])
        N = 10 if mx is None else mx
        r = reduction_number(J, I, N)
        return {"reduction_number": r}, N
    if cmd == "fseq":
        _need(args, 2, cmd)
        I, J = _ideal(sess, args[0]), _ideal(sess, args[1])
        fs = f_sequence(I, J, mx)
        return fs.to_json(), len(fs.values)
    if cmd == "huckaba":
        _need(args, 2, cmd)
        I, J = _ideal(sess, args[0]), _ideal(sess, args[1])
        rep = huckaba_test(I, J, mx, window)
        return rep.to_json(), len(rep.fseq.values)
    if cmd == "sr":
        if not args:
            raise ValueError("sr needs a complex")
        v = sess.bindings.get(args[0][0]) if len(args) == 1 else None
        if v is None:
            body = " ".join(a for a, _ in args)
            v = parse_complex(body, sess, args[0][1])
        if not isinstance(v, SimplicialComplex):
            raise ValueError(f"'{args[0][0]}' is not a complex")
        out = {"ideal": _sorted_gens(sr_ideal(v).polys())}
        out.update(fh_vectors(v).to_json())
        out.update(sr_degrees(v).to_json())
        return out, None
    if cmd == "mubasis":
        _need(args, 1, cmd)
        P = _param(sess, args[0])
        mb = syl.mu_basis(P)
        out = mb.to_json()
        out["cm_rees"] = syl.cm_rees_test(P, mb)
        out["contents"] = [_sorted_gens(syl.content_pair(c).gens) for c in mb.columns]
        return out, None
    if cmd == "implicitize":
        _need(args, 1, cmd)
        return syl.implicitize(_param(sess, args[0])).to_json(), None
    if cmd == "resultant":
        _need(args, 1, cmd)
        return {"F": str(syl.resultant_oracle(_param(sess, args[0])))}, None
    if cmd == "secelim":
        if len(args) == 1:
            r = syl.secondary_elim_degree(_param(sess, args[0]))
            return {"r": r, "epsilon": r - 1}, None
        _need(args, 2, cmd)
        J = _ideal(sess, args[0])
        a = sess.value(args[1])
        if len(a) != 1:
            raise ValueError("secelim J a: a is a single form")
        r, hf = syl.secondary_elimination_degree(J, a[0])
        return {"r": r, "epsilon": r - 1, "hilbert_function": list(hf)}, None
    raise ValueError(f"unknown command '{cmd}'")


def _inputs(sess: Session, st: Statement) -> dict:
    out = {"args": [a for a, _ in st.args]}
    if st.flags:
        out["flags"] = dict(st.flags)
    ideals = {}
    for tok, _ in st.args:
        v = sess.bindings.get(tok)
        if isinstance(v, list):
            ideals[tok] = _sorted_gens(v)
    if ideals:
        out["ideals"] = ideals
    return out


def _fmt(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(", ", ": "))
    return str(v)


def run(text: str, out=sys.stdout, err=sys.stderr, as_json: bool = False,
        defaults: dict | None = None, timing: bool = True) -> int:
    """Execute a script; returns the exit status."""
    try:
        stmts = parse_script(text)
    except ScriptError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    sess = Session(text, {k: v for k, v in (defaults or {}).items() if v is not None})
    status = 0
    for st in stmts:
        try:
            if st.kind == "ring":
                sess.declare_ring(st)
                continue
            if st.kind == "bind":
                sess.bind(st)
                continue
        except ScriptError as exc:
            print(f"parse error: {exc}", file=err)
            return 2
        t0 = time.perf_counter()
        try:
            if sess.ring is None and st.head != "sr":
                raise sess.error("declare a ring first", st.offset)
            result, upto = execute(sess, st)
        except ScriptError as exc:
            print(f"parse error: {exc}", file=err)
            return 2
        except Exception as exc:  # domain errors are reported verbatim
            status = 1
            msg = f"{type(exc).__name__}: {exc}"
            if as_json:
                print(json.dumps({"command": st.head, "inputs": _inputs(sess, st), "error": msg},
                                 sort_keys=True), file=out)
            print(f"{st.head}: error: {msg}", file=err)
            continue
        ms = round((time.perf_counter() - t0) * 1000, 3)
        if as_json:
            rep = {"command": st.head, "inputs": _inputs(sess, st), "result": result}
            if upto is not None:
                rep["verified_up_to"] = upto
            if timing:
                rep["elapsed_ms"] = ms
            print(json.dumps(rep, sort_keys=True), file=out)
        else:
            print(f"> {st.head} {st.body}".rstrip(), file=out)
            for k, v in result.items():
                print(f"  {k}: {_fmt(v)}", file=out)
            if upto is not None and "verified_up_to" not in result:
                print(f"  verified_up_to: {upto}", file=out)
    return status


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="gradedeg", description="Degrees, multiplicities and Rees equations.")
    ap.add_argument("script", nargs="?", help="script file, or - for standard input")
    ap.add_argument("-e", "--eval", dest="inline", help="script text given inline")
    ap.add_argument("--json", action="store_true", help="one JSON report per command")
    ap.add_argument("--window", type=int, help="default interpolation window")
    ap.add_argument("--order", choices=ORDERS, help="term order for initial ideals")
    ap.add_argument("--max", type=int, help="default bound for searches")
    ap.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from JSON reports")
    ns = ap.parse_args(argv)
    if ns.inline is not None:
        text = ns.inline
    elif ns.script in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(ns.script, encoding="utf-8") as fh:
            text = fh.read()
    defaults = {"window": ns.window, "order": ns.order, "max": ns.max}
    return run(text, as_json=ns.json, defaults=defaults, timing=not ns.no_timing)


if __name__ == "__main__":
    sys.exit(main())
