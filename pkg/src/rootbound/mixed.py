"""Mixed volumes and mixed integrals.

Each quantity has several independent routes (inclusion-exclusion,
decomposition along faces, reduction to mixed volumes) so that they can be
cross-checked against one another.  Face measures always pair a primitive
integer normal with a lattice-normalized volume.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import floor, prod
from typing import Sequence

from .concave import ConcavePWA, _inverse, constant_fn, determinant, envelopes, sup_convolution
from .errors import InvalidInput
from .polytope import Polytope, convex_hull, drop_coordinate, minkowski_sum, projection_index


def _origin(n: int) -> Polytope:
    return convex_hull([tuple(Fraction(0) for _ in range(n))])


def _check_polys(polys: Sequence[Polytope], n: int):
    if len(polys) != n:
        raise InvalidInput(f"expected {n} polytopes, got {len(polys)}")
    if any(P.ambient != n for P in polys):
        raise InvalidInput("polytopes must live in the working dimension")


def _check_fns(fns: Sequence[ConcavePWA]) -> int:
    if not fns:
        raise InvalidInput("mixed integral of an empty family")
    n = fns[0].n
    if len(fns) != n + 1 or any(f.n != n for f in fns):
        raise InvalidInput("a mixed integral in dimension n takes n+1 functions on R^n")
    return n


def _signed_subsets(m: int):
    for size in range(1, m + 1):
        sign = -1 if (m - size) % 2 else 1
        for J in combinations(range(m), size):
            yield sign, J


# --------------------------------------------------------------------------
# mixed volumes


def mixed_volume_ie(*polys: Polytope) -> Fraction:
    """Inclusion-exclusion over the volumes of partial Minkowski sums."""
    n = len(polys)
    if n == 0:
        return Fraction(1)
    _check_polys(polys, n)
    total = Fraction(0)
    for sign, J in _signed_subsets(n):
        total += sign * minkowski_sum(*(polys[j] for j in J)).volume
    return total


def _project_faces(faces, u):
    k = projection_index(u)
    return [convex_hull(drop_coordinate(F.vertices, k)) for F in faces], abs(u[k])


def mixed_volume_dec(*polys: Polytope) -> Fraction:
    """Support of the first body against the mixed volume of the faces of the others."""
    n = len(polys)
    if n == 0:
        return Fraction(1)
    _check_polys(polys, n)
    first, rest = polys[0], polys[1:]
    rest_sum = minkowski_sum(*rest) if rest else _origin(n)
    total = Fraction(0)
    for u, _ in rest_sum.codim1_directions():
        h = first.support(u)
        if h == 0:
            continue
        projected, scale = _project_faces([Q.face(u) for Q in rest], u)
        total += h * mixed_volume_dec(*projected) / scale
    return total


def mixed_volume(*polys: Polytope) -> Fraction:
    return mixed_volume_dec(*polys)


# --------------------------------------------------------------------------
# mixed integrals


def mixed_integral_def(*fns: ConcavePWA) -> Fraction:
    """Inclusion-exclusion of integrals of sup-convolutions."""
    n = _check_fns(fns)
    total = Fraction(0)
    for sign, J in _signed_subsets(n + 1):
        total += sign * sup_convolution(*(fns[j] for j in J)).integral()
    return total


def default_gamma(rho: ConcavePWA) -> int:
    return floor(min(rho.min_value, 0))


def mixed_integral_mv(*fns: ConcavePWA, gammas: Sequence | None = None) -> Fraction:
    """Mixed volume of the floored lifted hulls plus the correction in the floors."""
    n = _check_fns(fns)
    if gammas is None:
        gammas = [default_gamma(f) for f in fns]
    gammas = [Fraction(g) for g in gammas]
    if len(gammas) != n + 1:
        raise InvalidInput("one floor level per function is required")
    total = mixed_volume_ie(*(f.floored(g) for f, g in zip(fns, gammas)))
    domains = [f.domain for f in fns]
    for i, g in enumerate(gammas):
        if g:
            total += g * mixed_volume_ie(*(domains[:i] + domains[i + 1:]))
    return total


def _project_fn(rho: ConcavePWA, k: int) -> ConcavePWA:
    return ConcavePWA(rho.n - 1, tuple(sorted(g[:k] + g[k + 1:] for g in rho.generators)))


def mixed_integral_terms(*fns: ConcavePWA) -> list:
    """Nonzero and zero terms ``(kind, direction, value)`` of the decomposition route.

    ``kind`` is ``"facet"`` for directions of the domains and ``"roof"`` for
    upward normals of the lifted hulls.
    """
    n = _check_fns(fns)
    first, rest = fns[0], fns[1:]
    if n == 0:
        return [("point", (), first.generators[0][-1])]
    terms = []

    dom_sum = minkowski_sum(*(f.domain for f in rest))
    for u, _ in dom_sum.codim1_directions():
        h = first.domain.support(u)
        value = Fraction(0)
        if h:
            k = projection_index(u)
            restricted = [_project_fn(f.restrict_to_face(u), k) for f in rest]
            value = h * mixed_integral_dec(*restricted) / abs(u[k])
        terms.append(("facet", u, value))

    lift_sum = minkowski_sum(*(f.lifted for f in rest))
    for r, _ in lift_sum.codim1_directions():
        if r[-1] <= 0:
            continue
        h = first.lifted.support(r)
        value = Fraction(0)
        if h:
            projected, scale = _project_faces([f.lifted.face(r) for f in rest], r)
            value = h * mixed_volume_dec(*projected) / scale
        terms.append(("roof", r, value))
    return terms


def mixed_integral_dec(*fns: ConcavePWA) -> Fraction:
    """Boundary part over the domains plus roof part over upward facets."""
    return sum((t[2] for t in mixed_integral_terms(*fns)), Fraction(0))


def mixed_integral(*fns: ConcavePWA) -> Fraction:
    return mixed_integral_dec(*fns)


# --------------------------------------------------------------------------
# closed forms


def translation_identity_check(fns: Sequence[ConcavePWA], deltas: Sequence) -> Fraction:
    """Closed form of ``MI(rho_0 + d_0, ..., rho_n + d_n)``."""
    n = _check_fns(fns)
    if len(deltas) != n + 1:
        raise InvalidInput("one translation per function is required")
    domains = [f.domain for f in fns]
    total = mixed_integral_dec(*fns)
    for i, d in enumerate(deltas):
        total += Fraction(d) * mixed_volume_dec(*(domains[:i] + domains[i + 1:]))
    return total


def linear_identity_check(fns: Sequence[ConcavePWA], L) -> Fraction:
    """Closed form of ``MI(rho_0 ∘ L, ..., rho_n ∘ L)``."""
    n = _check_fns(fns)
    if len(L) != n:
        raise InvalidInput("matrix of the wrong shape")
    det = determinant(L)
    if det == 0:
        raise InvalidInput("singular matrix")
    return mixed_integral_dec(*fns) / abs(det)


def bagne_split(*polys: Polytope) -> Fraction:
    """Sum of the mixed integrals of upper and negated lower envelopes.

    For ``n + 1`` polytopes in ``R^(n+1)`` this equals their mixed volume.
    """
    m = len(polys)
    if m == 0 or any(P.ambient != m for P in polys):
        raise InvalidInput("expected n+1 polytopes in R^(n+1)")
    uppers, lowers = zip(*(envelopes(P) for P in polys))
    return mixed_integral_dec(*uppers) + mixed_integral_dec(*lowers)


def permanent(matrix: Sequence[Sequence]) -> Fraction:
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        raise InvalidInput("permanent of a non-square matrix")
    return sum(
        (prod((Fraction(matrix[i][p[i]]) for i in range(m)), start=Fraction(1)) for p in permutations(range(m))),
        Fraction(0),
    )


def parallelepiped(c: Sequence, forms=None) -> Polytope:
    """``{x : |l_j(x)| <= c_j}`` for the rows ``l_j`` of ``forms`` (identity by default)."""
    n = len(c)
    if forms is None:
        forms = [[int(i == j) for j in range(n)] for i in range(n)]
    inv = _inverse(forms, n)
    pts = []
    for signs in range(2 ** n):
        y = [Fraction(c[j]) * (-1 if signs >> j & 1 else 1) for j in range(n)]
        pts.append(tuple(sum(inv[i][j] * y[j] for j in range(n)) for i in range(n)))
    return convex_hull(pts)


def permanent_mi(boxes: Sequence[Sequence], constants: Sequence, forms=None) -> Fraction:
    """Mixed integral of constants on parallelepipeds ``Q(c_i)`` via a permanent."""
    m = len(boxes)
    n = m - 1
    if len(constants) != m or any(len(c) != n for c in boxes):
        raise InvalidInput("need n+1 boxes in R^n and one constant per box")
    if forms is None:
        forms = [[int(i == j) for j in range(n)] for i in range(n)]
    det = determinant(forms) if n else Fraction(1)
    if det == 0:
        raise InvalidInput("linear forms are not independent")
    unit_volume = Fraction(2 ** n) / abs(det)
    matrix = [[boxes[i][j] for i in range(m)] for j in range(n)] + [list(constants)]
    return unit_volume * permanent(matrix)


def constant_family(boxes: Sequence[Sequence], constants: Sequence, forms=None):
    """The constant functions whose mixed integral :func:`permanent_mi` evaluates."""
    return [constant_fn(parallelepiped(c, forms), r) for c, r in zip(boxes, constants)]
