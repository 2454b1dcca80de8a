"""Laurent polynomials in t1..tn with coefficients in Q[s], and their text format.

A system keeps its terms in the order they were written, with repeated
exponents allowed.  ``collapse`` merges them explicitly; nothing else does.

Text format::

    # comment
    n = 1
    f0 = (s-1) + (s-1)^2*t - 3*s*t^2
    f1 = -7*(s-1) + (s-1)^2*t + 3*s*t^2

Each top-level summand of an ``f`` line becomes one term (or one term per
distinct t-monomial when the summand itself expands to several).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import InvalidInput, ParseError
from .upoly import UniPoly, as_fraction, format_rational, format_upoly, upoly_content

AS_WRITTEN = "as-written"
COLLAPSED = "collapsed"


@dataclass(frozen=True)
class LaurentTerm:
    exponent: tuple
    coeff: UniPoly


@dataclass(frozen=True)
class LaurentSystem:
    n: int
    polys: tuple  # n+1 tuples of LaurentTerm
    presentation: str = AS_WRITTEN

    def __post_init__(self):
        if len(self.polys) != self.n + 1:
            raise InvalidInput(
                f"a system in {self.n} variables needs {self.n + 1} polynomials, "
                f"got {len(self.polys)}"
            )
        for poly in self.polys:
            for term in poly:
                if len(term.exponent) != self.n:
                    raise InvalidInput("exponent length does not match n")

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def has_repeated_supports(self) -> bool:
        return any(len({t.exponent for t in f}) != len(f) for f in self.polys)

    def collapse(self) -> "LaurentSystem":
        return collapse(self)


def make_system(n: int, polys: Sequence[Iterable], presentation: str = AS_WRITTEN):
    """Build a system from ``(exponent, coefficient)`` pairs.

    Exponents may be ints when ``n == 1``; coefficients may be UniPoly,
    ints, Fractions or coefficient lists.
    """
    out = []
    for poly in polys:
        terms = []
        for exp, coeff in poly:
            if isinstance(exp, int):
                exp = (exp,)
            if not isinstance(coeff, UniPoly):
                if isinstance(coeff, (list, tuple)):
                    coeff = UniPoly(coeff)
                else:
                    coeff = UniPoly.const(coeff)
            if coeff.is_zero():
                continue
            terms.append(LaurentTerm(tuple(int(a) for a in exp), coeff))
        out.append(tuple(terms))
    system = LaurentSystem(n, tuple(out), presentation)
    return collapse(system) if presentation == COLLAPSED else system


def collapse_poly(poly: Sequence[LaurentTerm]) -> tuple:
    merged: dict = {}
    for term in poly:
        merged[term.exponent] = merged.get(term.exponent, UniPoly()) + term.coeff
    return tuple(LaurentTerm(e, c) for e, c in merged.items() if not c.is_zero())


def collapse(system: LaurentSystem) -> LaurentSystem:
    return LaurentSystem(
        system.n, tuple(collapse_poly(f) for f in system.polys), COLLAPSED
    )


def content(poly: Sequence[LaurentTerm]) -> UniPoly:
    """Monic gcd of the coefficients (0 for the zero polynomial)."""
    return upoly_content(t.coeff for t in poly)


def is_zero_poly(poly: Sequence[LaurentTerm]) -> bool:
    return all(t.coeff.is_zero() for t in poly)


def is_primitive(poly: Sequence[LaurentTerm]) -> bool:
    if is_zero_poly(poly):
        return False
    return content(poly).is_constant()


def evaluate_at_s(poly: Sequence[LaurentTerm], v) -> list:
    """Specialize ``s = v``; returns merged ``(exponent, value)`` pairs, zeros dropped."""
    v = as_fraction(v)
    merged: dict = {}
    for term in poly:
        merged[term.exponent] = merged.get(term.exponent, Fraction(0)) + term.coeff(v)
    return [(e, c) for e, c in merged.items() if c != 0]


def evaluate_point(poly: Sequence[LaurentTerm], v, t: Sequence) -> Fraction:
    v = as_fraction(v)
    t = [as_fraction(x) for x in t]
    if any(x == 0 for x in t):
        raise InvalidInput("evaluation point must lie in the torus (all t_k nonzero)")
    total = Fraction(0)
    for term in poly:
        mono = Fraction(1)
        for tk, ak in zip(t, term.exponent):
            mono *= tk**ak
        total += term.coeff(v) * mono
    return total


def support(poly: Sequence[LaurentTerm]) -> list:
    return [t.exponent for t in poly]


# --------------------------------------------------------------------------
# printing


def _monomial_text(exp: tuple, n: int) -> str:
    parts = []
    for k, a in enumerate(exp):
        if a == 0:
            continue
        name = "t" if n == 1 else f"t{k + 1}"
        parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts)


def format_term(term: LaurentTerm, n: int):
    """Return ``(sign, body)`` for one term."""
    mono = _monomial_text(term.exponent, n)
    c = term.coeff
    nonzero = [k for k, x in enumerate(c.coeffs) if x != 0]
    if len(nonzero) == 1:
        k = nonzero[0]
        x = c.coeffs[k]
        sign = "-" if x < 0 else "+"
        mag = abs(x)
        factors = []
        if mag != 1 or (k == 0 and not mono):
            factors.append(format_rational(mag))
        if k:
            factors.append("s" if k == 1 else f"s^{k}")
        if mono:
            factors.append(mono)
        return sign, "*".join(factors)
    body = f"({format_upoly(c)})"
    if mono:
        body += "*" + mono
    return "+", body


def format_poly(poly: Sequence[LaurentTerm], n: int) -> str:
    if not poly:
        return "0"
    out = ""
    for i, term in enumerate(poly):
        sign, body = format_term(term, n)
        if i == 0:
            out = ("-" if sign == "-" else "") + body
        else:
            out += f" {sign} {body}"
    return out


def format_system(system: LaurentSystem) -> str:
    lines = [f"n = {system.n}"]
    for i, f in enumerate(system.polys):
        lines.append(f"f{i} = {format_poly(f, system.n)}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^()=])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize_line(text: str, lineno: int) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), lineno, pos + 1))
        pos = m.end()
    return toks


class _ExprParser:
    """Recursive descent over one right-hand side.

    Values are dicts ``{exponent tuple: UniPoly}``.
    """

    def __init__(self, toks, n, line_len):
        self.toks = toks
        self.i = 0
        self.n = n
        self.line_len = line_len

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        if tok is None:
            line = self.toks[-1].line if self.toks else None
            raise ParseError(msg, line, self.line_len + 1)
        raise ParseError(msg, tok.line, tok.col)

    def take(self, text=None):
        tok = self.peek()
        if tok is None or (text is not None and tok.text != text):
            self.error(f"expected {text!r}" if text else "unexpected end of line")
        self.i += 1
        return tok

    # value helpers

    def zero_exp(self):
        return (0,) * self.n

    @staticmethod
    def add(a, b, sign=1):
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, UniPoly()) + (c if sign > 0 else -c)
            if out[e].is_zero():
                del out[e]
        return out

    @staticmethod
    def mul(a, b):
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, UniPoly()) + ca * cb
                if out[e].is_zero():
                    del out[e]
        return out

    # grammar

    def parse_top(self):
        """Top-level sum: returns the list of summands, each a value dict."""
        summands = []
        tok = self.peek()
        if tok is None:
            self.error("empty expression")
        summands.append(self.parse_term())
        while self.peek() is not None and self.peek().text in "+-":
            op = self.take().text
            val = self.parse_term()
            if op == "-":
                val = {e: -c for e, c in val.items()}
            summands.append(val)
        if self.peek() is not None:
            self.error(f"unexpected token {self.peek().text!r}")
        return summands

    def parse_expr(self):
        val = self.parse_term()
        while self.peek() is not None and self.peek().text in "+-":
            op = self.take().text
            val = self.add(val, self.parse_term(), 1 if op == "+" else -1)
        return val

    def parse_term(self):
        val = self.parse_unary()
        while self.peek() is not None and self.peek().text == "*":
            self.take()
            val = self.mul(val, self.parse_unary())
        return val

    def parse_unary(self):
        tok = self.peek()
        if tok is not None and tok.text in "+-":
            self.take()
            val = self.parse_unary()
            return val if tok.text == "+" else {e: -c for e, c in val.items()}
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        tok = self.peek()
        if tok is None or tok.text != "^":
            return base
        self.take()
        sign = 1
        if self.peek() is not None and self.peek().text in "+-":
            sign = -1 if self.take().text == "-" else 1
        etok = self.take()
        if etok.kind != "num" or "/" in etok.text:
            self.error("exponent must be an integer", etok)
        k = sign * int(etok.text)
        if k >= 0:
            out = {self.zero_exp(): UniPoly.const(1)}
            for _ in range(k):
                out = self.mul(out, base)
            return out
        if len(base) != 1:
            self.error("negative exponent needs a single t-monomial base", etok)
        (e, c), = base.items()
        if not c.is_constant():
            self.error("negative exponent on an expression involving s", etok)
        if c.is_zero():
            self.error("negative power of zero", etok)
        return {tuple(k * a for a in e): UniPoly.const(c.lead**k)}

    def parse_atom(self):
        tok = self.take()
        if tok.kind == "num":
            return {self.zero_exp(): UniPoly.const(Fraction(tok.text))}
        if tok.text == "(":
            val = self.parse_expr()
            self.take(")")
            return val
        if tok.kind == "name":
            if tok.text == "s":
                return {self.zero_exp(): UniPoly.monomial(1)}
            idx = _t_index(tok, self.n)
            e = [0] * self.n
            e[idx] = 1
            return {tuple(e): UniPoly.const(1)}
        self.error(f"unexpected token {tok.text!r}", tok)


_TVAR = re.compile(r"t(\d*)$")
_FNAME = re.compile(r"f(\d+)$")


def _t_index(tok, n):
    m = _TVAR.match(tok.text)
    if not m:
        raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
    if m.group(1) == "":
        if n != 1:
            raise ParseError("'t' is only allowed when n = 1", tok.line, tok.col)
        return 0
    k = int(m.group(1))
    if not 1 <= k <= n:
        raise ParseError(f"variable {tok.text} out of range for n = {n}", tok.line, tok.col)
    return k - 1


def parse_system(text: str) -> LaurentSystem:
    """Parse the system text format; the result keeps the as-written terms."""
    header_n = None
    defs = []
    max_t = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = _tokenize_line(line, lineno)
        if len(toks) < 3 or toks[0].kind != "name" or toks[1].text != "=":
            tok = toks[0]
            raise ParseError("expected 'n = <int>' or 'f<k> = <expr>'", tok.line, tok.col)
        name = toks[0]
        if name.text == "n":
            if header_n is not None:
                raise ParseError("duplicate 'n' header", name.line, name.col)
            if len(toks) != 3 or toks[2].kind != "num" or "/" in toks[2].text:
                raise ParseError("'n' must be a positive integer", toks[2].line, toks[2].col)
            header_n = int(toks[2].text)
            if header_n < 1:
                raise ParseError("'n' must be a positive integer", toks[2].line, toks[2].col)
            continue
        m = _FNAME.match(name.text)
        if not m:
            raise ParseError(f"unknown definition {name.text!r}", name.line, name.col)
        for tok in toks[2:]:
            tm = _TVAR.match(tok.text) if tok.kind == "name" else None
            if tm:
                max_t = max(max_t, int(tm.group(1) or 1))
        defs.append((int(m.group(1)), name, toks[2:], len(line)))

    n = header_n if header_n is not None else max(max_t, 1)
    if not defs:
        raise ParseError("no polynomial definitions found", 1, 1)
    defs.sort(key=lambda d: d[0])
    indices = [d[0] for d in defs]
    if len(set(indices)) != len(indices):
        dup = next(d for d in defs if indices.count(d[0]) > 1)
        raise ParseError(f"duplicate definition f{dup[0]}", dup[1].line, dup[1].col)
    if indices != list(range(indices[0], indices[0] + len(indices))):
        raise ParseError("polynomial indices must be consecutive", defs[0][1].line, 1)

    polys = []
    for _, _, toks, line_len in defs:
        parser = _ExprParser(toks, n, line_len)
        terms = []
        for summand in parser.parse_top():
            for e in sorted(summand):
                if not summand[e].is_zero():
                    terms.append(LaurentTerm(e, summand[e]))
        polys.append(tuple(terms))
    return LaurentSystem(n, tuple(polys), AS_WRITTEN)
