"""Slopes of v-adic polytopes, initial systems, and a sufficient test for
exactness of the adelic bound.

Faces are selected by maximizing ``<(tau, 1), (a, z)>`` over the lifted
points of each polynomial.  As ``tau`` moves, the selected family changes
only across the hyperplanes where two lifted points of one polynomial tie,
so a finite set of representatives (one per cell of that arrangement)
enumerates every family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .adelic import _check_nonzero, require_primitive
from .algebra import INF, LaurentSystem, UniPoly, coprime_factorization, collapse, upoly_gcd
from .algebra.upoly import format_rational, initial_coeff, ord_place
from .errors import ExtensionFieldNeeded, InvalidInput, UnsupportedDimension
from .polytope import primitive_vector, rank_of

GENERIC = "generic"


@dataclass(frozen=True)
class SlopeFamily:
    place: object  # Fraction, INF or GENERIC
    tau: tuple
    faces: tuple  # per polynomial: indices of the terms on the face
    zero_only: bool = False  # attained at tau = 0 and nowhere else

    @property
    def is_monomial_somewhere(self) -> bool:
        return any(len(face) == 1 for face in self.faces)


@dataclass(frozen=True)
class InitialSystem:
    place: object
    tau: tuple
    polys: tuple  # per polynomial: tuple of (exponent, Fraction) with merged exponents

    def __str__(self):
        from .algebra.laurent import _monomial_text

        n = len(self.tau)
        parts = []
        for terms in self.polys:
            if not terms:
                parts.append("0")
                continue
            chunks = []
            for e, c in terms:
                mono = _monomial_text(e, n)
                if isinstance(c, UniPoly):
                    chunks.append(f"({c})" if not mono else f"({c})*{mono}")
                elif not mono:
                    chunks.append(format_rational(c))
                elif c == 1:
                    chunks.append(mono)
                elif c == -1:
                    chunks.append("-" + mono)
                else:
                    chunks.append(f"{format_rational(c)}*{mono}")
            parts.append(" + ".join(chunks).replace("+ -", "- "))
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class Certificate:
    verdict: str  # "certified" or "inconclusive"
    obstructions: tuple
    initial_systems: tuple

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"


# --------------------------------------------------------------------------
# lifted points and representatives


def _lifts(system: LaurentSystem, v) -> list:
    if v == GENERIC:
        return [[Fraction(0)] * len(f) for f in system.polys]
    return [[Fraction(-ord_place(t.coeff, v)) for t in f] for f in system.polys]


def _critical_hyperplanes(system, lifts) -> list:
    """Normalized ``(d, c)`` with ``<d, tau> = c`` where two lifted points tie."""
    out = set()
    for f, zs in zip(system.polys, lifts):
        for (t1, z1), (t2, z2) in combinations(zip(f, zs), 2):
            d = tuple(a - b for a, b in zip(t1.exponent, t2.exponent))
            if not any(d):
                continue
            g = primitive_vector(d)
            scale = next(x for x in d if x) // next(x for x in g if x)
            if next(x for x in g if x) < 0:
                g, scale = tuple(-x for x in g), -scale
            out.add((g, (z2 - z1) / scale))
    return sorted(out)


def _representatives_1(lines) -> list:
    crit = sorted({c for _, c in lines})
    if not crit:
        return [(Fraction(0),)]
    reps = [crit[0] - 1, crit[-1] + 1]
    reps += crit
    reps += [(a + b) / 2 for a, b in zip(crit, crit[1:])]
    return [(x,) for x in sorted(set(reps))]


def _intersect(l1, l2):
    (a, b), c = l1
    (p, q), r = l2
    det = a * q - b * p
    if det == 0:
        return None
    return (Fraction(c * q - b * r, det), Fraction(a * r - c * p, det))


def _representatives_2(lines) -> list:
    if not lines:
        return [(Fraction(0), Fraction(0))]
    reps = set()
    for L in lines:
        (a, b), c = L
        # parametrize the line by tau = base + x * direction
        direction = (-b, a)
        base = (c / a, Fraction(0)) if a else (Fraction(0), c / b)
        pts = []
        for M in lines:
            if M is L:
                continue
            p = _intersect(L, M)
            if p is not None:
                pts.append(p)
                reps.add(p)
        dot = lambda p: (p[0] - base[0]) * direction[0] + (p[1] - base[1]) * direction[1]
        norm = direction[0] ** 2 + direction[1] ** 2
        params = sorted({dot(p) / norm for p in pts})
        if params:
            xs = [params[0] - 1, params[-1] + 1] + [(u + w) / 2 for u, w in zip(params, params[1:])]
        else:
            xs = [Fraction(0)]
        for x in xs:
            e = (base[0] + x * direction[0], base[1] + x * direction[1])
            reps.add(e)
            # step off the line into the two adjacent cells
            eps = None
            for M in lines:
                if M is L:
                    continue
                (m1, m2), mc = M
                along = m1 * a + m2 * b
                if along == 0:
                    continue
                gap = abs((m1 * e[0] + m2 * e[1] - mc) / along)
                if gap and (eps is None or gap < eps):
                    eps = gap
            eps = Fraction(1) if eps is None else eps / 2
            reps.add((e[0] + eps * a, e[1] + eps * b))
            reps.add((e[0] - eps * a, e[1] - eps * b))
    reps.add((Fraction(0), Fraction(0)))
    return sorted(reps)


def _faces_at(system, lifts, tau) -> tuple:
    faces = []
    for f, zs in zip(system.polys, lifts):
        vals = [sum(x * y for x, y in zip(tau, t.exponent)) + z for t, z in zip(f, zs)]
        top = max(vals)
        faces.append(tuple(j for j, x in enumerate(vals) if x == top))
    return tuple(faces)


def _families(system: LaurentSystem, lifts, place) -> list:
    n = system.n
    lines = _critical_hyperplanes(system, lifts)
    if n == 1:
        reps = _representatives_1(lines) + [(Fraction(0),)]
    elif n == 2:
        reps = _representatives_2(lines)
    else:
        raise UnsupportedDimension("slope enumeration is implemented for n <= 2")
    zero = tuple(Fraction(0) for _ in range(n))
    through_zero = [d for d, c in lines if c == 0]
    zero_is_vertex = bool(through_zero) and rank_of(through_zero, n) == n
    seen: dict = {}
    for tau in sorted(set(reps)):
        key = _faces_at(system, lifts, tau)
        # prefer a nonzero representative: only tau = 0 itself is ever excluded
        if key not in seen or seen[key] == zero:
            seen[key] = tau
    out = [SlopeFamily(place, tau, key, tau == zero and zero_is_vertex) for key, tau in seen.items()]
    out.sort(key=lambda fam: fam.tau)
    return out


def slopes_at_place(system: LaurentSystem, v) -> list:
    """Every family of slopes at ``v`` (a rational, ``INF`` or ``GENERIC``)."""
    _check_nonzero(system)
    if v is not INF and v != GENERIC:
        v = Fraction(v)
    return _families(system, _lifts(system, v), v)


def slopes_at_factor(system: LaurentSystem, p: UniPoly) -> list:
    """Families at the roots of ``p``, computed from the exponents of ``p`` alone."""
    _check_nonzero(system)
    lifts = []
    for f in system.polys:
        row = []
        for t in f:
            e, g = 0, t.coeff
            while True:
                q, r = g.divmod(p)
                if not r.is_zero():
                    break
                g, e = q, e + 1
            row.append(Fraction(-e))
        lifts.append(row)
    return _families(system, lifts, p)


# --------------------------------------------------------------------------
# initial systems


def _initial(system, family: SlopeFamily) -> InitialSystem:
    v = family.place
    polys = []
    for f, face in zip(system.polys, family.faces):
        merged: dict = {}
        for j in face:
            t = f[j]
            if v == GENERIC:
                raise InvalidInput("generic places have no rational initial coefficients")
            c = initial_coeff(t.coeff, v)
            merged[t.exponent] = merged.get(t.exponent, Fraction(0)) + c
        polys.append(tuple(sorted((e, c) for e, c in merged.items() if c != 0)))
    return InitialSystem(v, family.tau, tuple(polys))


def _generic_initial(system, family: SlopeFamily) -> InitialSystem:
    """Face subsystem with the coefficients kept as polynomials in ``s``."""
    polys = []
    for f, face in zip(system.polys, family.faces):
        merged: dict = {}
        for j in face:
            merged[f[j].exponent] = merged.get(f[j].exponent, UniPoly()) + f[j].coeff
        polys.append(tuple(sorted((e, c) for e, c in merged.items() if not c.is_zero())))
    return InitialSystem(GENERIC, family.tau, tuple(polys))


def initial_system(system: LaurentSystem, v, tau: Sequence) -> InitialSystem:
    _check_nonzero(system)
    if v is not INF:
        v = Fraction(v)
    tau = tuple(Fraction(x) for x in tau)
    if len(tau) != system.n:
        raise InvalidInput("tau has the wrong dimension")
    lifts = _lifts(system, v)
    return _initial(system, SlopeFamily(v, tau, _faces_at(system, lifts, tau)))


def initial_system_at_factor(system: LaurentSystem, p: UniPoly, tau: Sequence) -> InitialSystem:
    """Initial system at the root of a factor; only degree-one places are rational."""
    sq = p.squarefree_part()
    if sq.degree != 1:
        raise ExtensionFieldNeeded(f"the place {p} is not rational")
    v = -sq.coeffs[0] / sq.coeffs[1]
    return initial_system(system, v, tau)


# --------------------------------------------------------------------------
# solvability (n = 1)


def _strip(terms) -> UniPoly:
    terms = [(e[0] if isinstance(e, tuple) else e, Fraction(c)) for e, c in terms]
    terms = [(e, c) for e, c in terms if c != 0]
    if not terms:
        return UniPoly()
    low = min(e for e, _ in terms)
    coeffs = [Fraction(0)] * (max(e for e, _ in terms) - low + 1)
    for e, c in terms:
        coeffs[e - low] += c
    return UniPoly(coeffs)


def solvable_in_torus_n1(polys) -> bool:
    """Common root in Q-bar^x of univariate Laurent polynomials ``[(exp, coeff), ...]``."""
    stripped = []
    for terms in polys:
        terms = list(terms.items()) if isinstance(terms, dict) else list(terms)
        if any(isinstance(e, tuple) and len(e) != 1 for e, _ in terms):
            raise UnsupportedDimension("solvability is decided for one variable only")
        stripped.append(_strip(terms))
    nonzero = [p for p in stripped if not p.is_zero()]
    if not nonzero:
        return True
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        g = upoly_gcd(g, p)
    return g.degree >= 1


# --------------------------------------------------------------------------
# certificate


def _places(system: LaurentSystem):
    """Coprime factors of the coefficients, written and merged."""
    coeffs = [t.coeff for f in system.polys for t in f]
    coeffs += [t.coeff for f in collapse(system).polys for t in f]
    return coprime_factorization(coeffs).polys


def equality_certificate(system: LaurentSystem) -> Certificate:
    require_primitive(system)
    n = system.n
    obstructions = []
    listed = []
    rational = []
    for p in _places(system):
        sq = p.squarefree_part()
        if sq.degree == 1:
            rational.append(-sq.coeffs[0] / sq.coeffs[1])
            continue
        # the root is irrational, but its families are those of the exponent data
        fam = slopes_at_factor(system, p)
        if n != 1 or not all(f.is_monomial_somewhere for f in fam if not f.zero_only):
            obstructions.append(f"place {p} of degree {p.degree} needs an extension field")

    if n == 1:
        for i, (f, g) in enumerate(zip(system.polys, collapse(system).polys)):
            ends = {min(t.exponent for t in f), max(t.exponent for t in f)}
            if not ends <= {t.exponent for t in g}:
                obstructions.append(f"f{i} cancels at an endpoint of its support; generic initial system vanishes")

    checks = [(v, False) for v in sorted(rational)] + [(INF, True)]
    for v, all_tau in checks:
        for fam in slopes_at_place(system, v):
            if fam.zero_only and not all_tau:
                continue
            init = _initial(system, fam)
            listed.append(init)
            if n == 1:
                if solvable_in_torus_n1(init.polys):
                    where = "inf" if v is INF else format_rational(v)
                    tau = format_rational(fam.tau[0])
                    obstructions.append(f"initial system at v={where}, tau={tau} is solvable: {init}")
    if n >= 2:
        for fam in slopes_at_place(system, GENERIC):
            if any(fam.tau):
                listed.append(_generic_initial(system, fam))
        obstructions.append(f"solvability of initial systems is not decided for n = {n}")
    verdict = "inconclusive" if obstructions else "certified"
    return Certificate(verdict, tuple(obstructions), tuple(listed))
