"""Independent root count for systems in one torus variable.

The count is read off the resultant in ``t``.  At a factor of the resultant
where the leading (or trailing) coefficients of both polynomials vanish, the
resultant's order may include roots escaping to ``t = oo`` (or ``t = 0``);
there the fibers are inspected directly over the residue ring, splitting it
whenever a zero divisor shows up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LaurentSystem, UniPoly, collapse, coprime_factorization, upoly_gcd
from .algebra.upoly import as_fraction, ord_at
from .errors import CommonComponent, Inconclusive, InvalidInput, UnsupportedDimension


# --------------------------------------------------------------------------
# resultant


def _det_bareiss(m: list) -> UniPoly:
    """Fraction-free determinant of a square matrix over Q[s]."""
    n = len(m)
    if n == 0:
        return UniPoly.const(1)
    a = [list(row) for row in m]
    sign = 1
    prev = UniPoly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return UniPoly()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def _resultant(f: Sequence[UniPoly], g: Sequence[UniPoly]) -> UniPoly:
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    zero = UniPoly()
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(f)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(g)):
            row[i + k] = c
        rows.append(row)
    return _det_bareiss(rows)


def _as_tpoly(p) -> list:
    out = [c if isinstance(c, UniPoly) else UniPoly.const(c) for c in p]
    while out and out[-1].is_zero():
        out.pop()
    return out


def resultant_t(f0: Sequence, f1: Sequence) -> UniPoly:
    """Sylvester resultant in ``t`` of polynomials given by coefficient lists in ``t``."""
    a, b = _as_tpoly(f0), _as_tpoly(f1)
    if len(a) < 2 or len(b) < 2:
        raise InvalidInput("both polynomials need positive degree in t")
    return _resultant(a, b)


# --------------------------------------------------------------------------
# arithmetic in (Q[s]/q)[t]


def _xgcd(a: UniPoly, b: UniPoly):
    """``(g, x)`` with ``g = gcd(a, b)`` monic and ``x*a = g mod b``."""
    r0, r1 = a % b, b
    x0, x1 = UniPoly.const(1), UniPoly()
    r0, r1 = r1, r0
    x0, x1 = x1, x0
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        x0, x1 = x1, x0 - q * x1
    lead = r0.lead
    return r0 * (1 / lead), x0 * (1 / lead)


class _Split(Exception):
    def __init__(self, factor):
        self.factor = factor


def _reduce(p: list, q: UniPoly) -> list:
    out = [c % q for c in p]
    while out and out[-1].is_zero():
        out.pop()
    return out


def _check_unit(c: UniPoly, q: UniPoly) -> UniPoly:
    """Inverse of ``c`` modulo ``q``, or raise a split on a zero divisor."""
    g, x = _xgcd(c, q)
    if g.degree > 0:
        raise _Split(g)
    return x % q


def _strip_low(p: list, q: UniPoly) -> list:
    k = 0
    while k < len(p) and p[k].is_zero():
        k += 1
    p = p[k:]
    if p:
        _check_unit(p[0], q)
    return p


def _fiber_gcd_degree(a: list, b: list, q: UniPoly) -> int:
    a = _strip_low(_reduce(a, q), q)
    b = _strip_low(_reduce(b, q), q)
    if a:
        _check_unit(a[-1], q)
    if b:
        _check_unit(b[-1], q)
    if not a and not b:
        return 10**9  # every t is a common root
    while b:
        inv = _check_unit(b[-1], q)
        while len(a) >= len(b):
            c = (a[-1] * inv) % q
            shift = len(a) - len(b)
            for k, bc in enumerate(b):
                a[shift + k] = (a[shift + k] - c * bc) % q
            while a and a[-1].is_zero():
                a.pop()
            if a:
                _check_unit(a[-1], q)
        a, b = b, a
    return len(a) - 1


def fiber_components(a: list, b: list, q: UniPoly) -> list:
    """``[(component, gcd degree)]`` over a splitting of the squarefree ``q``."""
    pending = [q.squarefree_part()]
    out = []
    while pending:
        comp = pending.pop()
        try:
            out.append((comp, _fiber_gcd_degree(a, b, comp)))
        except _Split as sp:
            g = sp.factor.primitive()
            pending.append(g)
            pending.append(comp.exact_div(g).primitive())
    out.sort(key=lambda item: item[0].sort_key())
    return out


# --------------------------------------------------------------------------
# counting


@dataclass(frozen=True)
class OracleResult:
    count: int
    valid: bool
    unclean: tuple  # of (factor, "resolved" | "flagged")
    resultant: UniPoly


def _normalized(system: LaurentSystem) -> list:
    if system.n != 1:
        raise UnsupportedDimension("the resultant oracle handles one torus variable")
    out = []
    for i, f in enumerate(collapse(system).polys):
        if not f:
            raise InvalidInput(f"f{i} is the zero polynomial")
        low = min(t.exponent[0] for t in f)
        high = max(t.exponent[0] for t in f)
        coeffs = [UniPoly()] * (high - low + 1)
        for t in f:
            coeffs[t.exponent[0] - low] = coeffs[t.exponent[0] - low] + t.coeff
        out.append(coeffs)
    return out


def count_roots_n1(system: LaurentSystem) -> OracleResult:
    a, b = _normalized(system)
    R = _resultant(a, b)
    if R.is_zero():
        raise CommonComponent("the polynomials share a factor of positive degree in t")
    l0, l1, c0, c1 = a[-1], b[-1], a[0], b[0]
    lead_gcd = upoly_gcd(l0, l1)
    trail_gcd = upoly_gcd(c0, c1)
    fac = coprime_factorization([R, l0, l1, c0, c1, lead_gcd, trail_gcd])
    count = 0
    valid = True
    unclean = []
    for q, exps in fac.factors:
        e_r = exps[0]
        if e_r == 0:
            continue
        if exps[5] == 0 and exps[6] == 0:
            count += e_r * q.degree
            continue
        comps = fiber_components(a, b, q)
        if all(d == 0 for _, d in comps):
            unclean.append((q, "resolved"))
        else:
            valid = False
            unclean.append((q, "flagged"))
    return OracleResult(count, valid, tuple(unclean), R)


def _partials(system: LaurentSystem, v: Fraction, t: Fraction):
    rows = []
    for f in collapse(system).polys:
        ds = dt = Fraction(0)
        for term in f:
            a = term.exponent[0]
            ds += term.coeff.derivative()(v) * t**a
            dt += a * term.coeff(v) * t ** (a - 1)
        rows.append((ds, dt))
    return rows


def verify_claimed_root(system: LaurentSystem, v, t, expected_mult: int) -> bool:
    """Check a root ``(v, t)`` and its multiplicity against the resultant."""
    v, t = as_fraction(v), as_fraction(t)
    if t == 0:
        raise InvalidInput("t must be nonzero")
    a, b = _normalized(system)
    for p in (a, b):
        shift = min(term.exponent[0] for term in collapse(system).polys[0 if p is a else 1])
        value = sum((c(v) * t ** (k + shift) for k, c in enumerate(p)), Fraction(0))
        if value != 0:
            return False
    R = _resultant(a, b)
    if R.is_zero():
        raise CommonComponent("the polynomials share a factor of positive degree in t")
    if (a[-1](v) == 0 and b[-1](v) == 0) or (a[0](v) == 0 and b[0](v) == 0):
        raise Inconclusive(f"s = {v} is not a clean place of the resultant")
    fa = UniPoly([c(v) for c in a])
    fb = UniPoly([c(v) for c in b])
    g = upoly_gcd(fa, fb)
    if g.degree != ord_at(g, t):
        raise Inconclusive(f"the fiber over s = {v} contains other common roots")
    if ord_at(R, v) != expected_mult:
        return False
    (f0s, f0t), (f1s, f1t) = _partials(system, v, t)
    jac = f0s * f1t - f0t * f1s
    return (jac != 0) == (expected_mult == 1)
