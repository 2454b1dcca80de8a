"""Adelic root bound for Laurent systems with coefficients in Q[s].

For every place of the projective line the coefficients' orders of vanishing
lift the supports to v-adic polytopes; the bound sums the mixed integrals of
the resulting roof functions.  Finite places are handled through a pairwise
coprime decomposition of the coefficients, so no roots are ever extracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Callable, Sequence

from .algebra import AS_WRITTEN, COLLAPSED, INF, LaurentSystem, UniPoly, collapse, coprime_factorization
from .algebra.factor import CoprimeFactorization
from .algebra.laurent import content, is_zero_poly
from .algebra.upoly import ord_place
from .concave import ConcavePWA, _in_polytope, from_lifted_points, zero_fn
from .errors import InvalidInput, NotPrimitive, RootBoundError
from .lattice import lattice_index
from .mixed import mixed_integral_dec, mixed_integral_def, mixed_integral_mv, mixed_volume_dec
from .polytope import Polytope, convex_hull, rank_of


# --------------------------------------------------------------------------
# v-adic data


def _lifted_points(poly, v) -> list:
    return [t.exponent + (Fraction(-ord_place(t.coeff, v)),) for t in poly]


def vadic_polytope(poly, v, n: int | None = None) -> Polytope:
    """``Conv{(a_j, -ord_v(alpha_j))}``; the origin for the zero polynomial."""
    if is_zero_poly(poly):
        if n is None:
            raise InvalidInput("dimension needed for the zero polynomial")
        return convex_hull([tuple(Fraction(0) for _ in range(n + 1))])
    return convex_hull(_lifted_points(poly, v))


def roof(poly, v, n: int | None = None) -> ConcavePWA:
    if is_zero_poly(poly):
        if n is None:
            raise InvalidInput("dimension needed for the zero polynomial")
        return zero_fn(n)
    return from_lifted_points(_lifted_points(poly, v))


def newton_polytope(poly, n: int) -> Polytope:
    if is_zero_poly(poly):
        return convex_hull([tuple(Fraction(0) for _ in range(n))])
    return convex_hull([t.exponent for t in poly])


@dataclass(frozen=True)
class PlaceSet:
    """Finite places as coprime factors with their degrees; infinity is implicit."""

    factors: tuple  # of (UniPoly, degree)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class RoofFamily:
    finite: tuple  # per factor: tuple of ConcavePWA, one per polynomial
    infinity: tuple
    places: PlaceSet

    def derived(self, v) -> tuple:
        """Roof functions at a rational root ``v`` of a degree-one factor."""
        v = Fraction(v)
        for (p, deg), fns in zip(self.places.factors, self.finite):
            if deg == 1 and p(v) == 0:
                return fns
        return tuple(_zero_on(f.domain) for f in self.infinity)


def _zero_on(P: Polytope) -> ConcavePWA:
    return ConcavePWA(P.ambient, tuple(v + (Fraction(0),) for v in P.vertices))


def _check_nonzero(system: LaurentSystem):
    for i, f in enumerate(system.polys):
        if is_zero_poly(f):
            raise InvalidInput(f"f{i} is the zero polynomial")


def _factorization(system: LaurentSystem, extra: Sequence[UniPoly] = ()) -> CoprimeFactorization:
    coeffs = [t.coeff for f in system.polys for t in f]
    return coprime_factorization(coeffs + list(extra))


def _exponent_table(system: LaurentSystem, fac: CoprimeFactorization):
    """``table[p][i][j] = e_p(alpha_{i,j})``."""
    table = []
    for _, exps in fac.factors:
        it = iter(exps)
        table.append([[next(it) for _ in f] for f in system.polys])
    return table


def roofs_from_factorization(system: LaurentSystem):
    _check_nonzero(system)
    fac = _factorization(system)
    table = _exponent_table(system, fac)
    places = PlaceSet(tuple((p, p.degree) for p in fac.polys))
    finite = []
    for rows in table:
        fns = []
        for f, es in zip(system.polys, rows):
            fns.append(from_lifted_points([t.exponent + (Fraction(-e),) for t, e in zip(f, es)]))
        finite.append(tuple(fns))
    infinity = tuple(roof(f, INF) for f in system.polys)
    return places, RoofFamily(tuple(finite), infinity, places)


# --------------------------------------------------------------------------
# bound


@dataclass(frozen=True)
class PlaceContribution:
    factor: object  # UniPoly, or INF
    degree: int
    mi: Fraction


@dataclass(frozen=True)
class BoundReport:
    n: int
    presentation: str
    places: tuple  # of PlaceContribution, finite places only
    mi_infinity: Fraction
    correction: Fraction = Fraction(0)
    kb_bound: Fraction | None = None
    positivity: bool | None = None

    @property
    def mi_total(self) -> Fraction:
        return self.mi_infinity + sum((c.degree * c.mi for c in self.places), Fraction(0))

    @property
    def bound(self) -> Fraction:
        return self.mi_total + self.correction


def _mi_engine(check_all_routes: bool) -> Callable:
    if not check_all_routes:
        return mixed_integral_dec

    def checked(*fns):
        values = (mixed_integral_dec(*fns), mixed_integral_def(*fns), mixed_integral_mv(*fns))
        if len(set(values)) != 1:
            raise RootBoundError(f"mixed integral routes disagree: {values}")
        return values[0]

    return checked


def _with_presentation(system: LaurentSystem, presentation: str | None) -> LaurentSystem:
    if presentation is None or presentation == system.presentation:
        return system
    if presentation == COLLAPSED:
        return collapse(system)
    if presentation == AS_WRITTEN:
        return LaurentSystem(system.n, system.polys, AS_WRITTEN)
    raise InvalidInput(f"unknown presentation {presentation!r}")


def require_primitive(system: LaurentSystem):
    _check_nonzero(system)
    for i, f in enumerate(collapse(system).polys):
        c = content(f)
        if not c.is_constant():
            raise NotPrimitive(i, c)


def _place_mis(system: LaurentSystem, check_all_routes: bool):
    mi = _mi_engine(check_all_routes)
    places, fam = roofs_from_factorization(system)
    contributions = tuple(
        PlaceContribution(p, deg, mi(*fns)) for (p, deg), fns in zip(places.factors, fam.finite)
    )
    return contributions, mi(*fam.infinity)


def bound_mainthm(system: LaurentSystem, presentation: str | None = None, *, check_all_routes=False) -> BoundReport:
    system = _with_presentation(system, presentation)
    require_primitive(system)
    places, mi_inf = _place_mis(system, check_all_routes)
    return BoundReport(system.n, system.presentation, places, mi_inf)


def bound_unmixed(system: LaurentSystem, presentation: str | None = None) -> Fraction:
    """Unmixed bound with the hull of all supports and the envelope of all lifts."""
    system = _with_presentation(system, presentation)
    require_primitive(system)
    n = system.n
    fac = _factorization(system)
    table = _exponent_table(system, fac)
    Q = convex_hull([t.exponent for f in system.polys for t in f])
    weighted = [(1, from_lifted_points(p for f in system.polys for p in _lifted_points(f, INF)))]
    for (p, _), rows in zip(fac.factors, table):
        pts = [t.exponent + (Fraction(-e),) for f, es in zip(system.polys, rows) for t, e in zip(f, es)]
        weighted.append((p.degree, from_lifted_points(pts)))
    return unmixed_from_dominating(system, Q, weighted, check=False)


def unmixed_from_dominating(system: LaurentSystem, Q: Polytope, weighted, check: bool = True) -> Fraction:
    """``(n+1)! * sum(weight * integral)`` for a user-supplied dominating pair.

    ``weighted`` lists ``(weight, theta)`` with ``theta`` defined on ``Q``; the
    first entry is the place at infinity and the others coprime factors with
    their degrees.  With ``check`` set, domination of each roof function is
    verified at its generators.
    """
    n = system.n
    if check:
        for f in system.polys:
            for a in (t.exponent for t in f):
                if not _contains(Q, a):
                    raise InvalidInput("Q does not contain every Newton polytope")
        _, fam = roofs_from_factorization(system)
        groups = [fam.infinity] + list(fam.finite)
        if len(groups) != len(weighted):
            raise InvalidInput("one dominating function per place is required")
        for fns, (_, theta) in zip(groups, weighted):
            for f in fns:
                for g in f.generators:
                    if theta.evaluate(g[:-1]) < g[-1]:
                        raise InvalidInput("supplied function does not dominate a roof function")
    total = Fraction(0)
    for w, theta in weighted:
        if theta.domain != Q:
            raise InvalidInput("dominating function must be defined on Q")
        total += w * theta.integral()
    return factorial(n + 1) * total


def _contains(P: Polytope, x) -> bool:
    return _in_polytope(P, tuple(Fraction(c) for c in x))


# --------------------------------------------------------------------------
# base points


def base_corrections(system: LaurentSystem) -> Fraction:
    """Correction term for places where exactly one polynomial has a base point."""
    _check_nonzero(system)
    n = system.n
    col = collapse(system)
    contents = [content(f) for f in col.polys]
    merged = [t.coeff for f in col.polys for t in f]
    fac = _factorization(system, merged + contents)
    offset = sum(len(f) for f in system.polys)
    total = Fraction(0)
    for p, exps in fac.factors:
        it = iter(exps[offset:offset + len(merged)])
        merged_e = [[next(it) for _ in f] for f in col.polys]
        base = [exps[offset + len(merged) + i] for i in range(n + 1)]
        owners = [i for i, e in enumerate(base) if e > 0]
        if len(owners) != 1:
            continue
        i = owners[0]
        faces = []
        for k, (f, es) in enumerate(zip(col.polys, merged_e)):
            if k == i:
                continue
            pts = [t.exponent for t, e in zip(f, es) if e == 0]
            if not pts:
                faces = None
                break
            faces.append(convex_hull(pts))
        if faces is None:
            continue
        mv = mixed_volume_dec(*faces) if n else Fraction(1)
        total += p.degree * base[i] * mv
    return total


def bound_corrected(system: LaurentSystem, presentation: str | None = None, *, check_all_routes=False) -> BoundReport:
    system = _with_presentation(system, presentation)
    _check_nonzero(system)
    places, mi_inf = _place_mis(system, check_all_routes)
    return BoundReport(system.n, system.presentation, places, mi_inf, correction=base_corrections(system))


# --------------------------------------------------------------------------
# comparison and positivity


def st_polytope(poly, n: int) -> Polytope:
    """Newton polytope in the variables ``(t, s)``."""
    pts = []
    for t in poly:
        for k, c in enumerate(t.coeff.coeffs):
            if c:
                pts.append(t.exponent + (k,))
    if not pts:
        pts = [tuple(0 for _ in range(n + 1))]
    return convex_hull(pts)


def kb_bound(system: LaurentSystem) -> Fraction:
    _check_nonzero(system)
    return mixed_volume_dec(*(st_polytope(f, system.n) for f in system.polys))


def _generators(system: LaurentSystem) -> list:
    """Per polynomial, the vectors ``(a_j - a_0, valuation differences)``.

    The valuation part has one coordinate per coprime factor and one for
    infinity, so a vector records the orders at every place at once.
    """
    fac = _factorization(system)
    table = _exponent_table(system, fac)
    gens = []
    for i, f in enumerate(system.polys):
        out = []
        a0, d0 = f[0].exponent, f[0].coeff.degree
        for j, t in enumerate(f[1:], start=1):
            da = tuple(x - y for x, y in zip(t.exponent, a0))
            vals = tuple(-(rows[i][j] - rows[i][0]) for rows in table)
            out.append(da + vals + (t.coeff.degree - d0,))
        gens.append(out)
    return gens


def _projection_dim(vectors: list, n: int) -> int:
    """Dimension of the image of the toric family in the factors owning ``vectors``."""
    if not vectors:
        return 0
    width = len(vectors[0])
    r_torus = rank_of([v[:n] for v in vectors], n)
    r_joint = rank_of(vectors, width)
    return r_torus + min(1, r_joint - r_torus)


def positivity_predicate(system: LaurentSystem) -> bool:
    """Every set ``I`` of polynomials has an image of dimension at least ``|I|``."""
    _check_nonzero(system)
    n = system.n
    gens = _generators(system)
    for size in range(1, n + 2):
        for I in combinations(range(n + 1), size):
            if _projection_dim([g for i in I for g in gens[i]], n) < size:
                return False
    return True


@dataclass(frozen=True)
class LatticeDiagnostics:
    rank: int
    index: int | None


def lattice_diagnostics(system: LaurentSystem) -> LatticeDiagnostics:
    _check_nonzero(system)
    n = system.n
    vecs = []
    for f in system.polys:
        a0 = f[0].exponent
        vecs.extend(tuple(x - y for x, y in zip(t.exponent, a0)) for t in f[1:])
    rank = rank_of(vecs, n) if n else 0
    index = lattice_index(vecs, n) if rank == n else None
    return LatticeDiagnostics(rank, index)
