"""Concave piecewise-affine functions on polytopes.

A function is stored through a finite set of lifted points ``(u, z)``; its
value at ``u`` is the largest ``z`` with ``(u, z)`` in the convex hull.  Only
the vertices of the upper hull are kept, so two functions are equal exactly
when their generator tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from .errors import InvalidInput
from .polytope import Polytope, _RowEchelon, convex_hull, frac_det, minkowski_sum


def _canonical(points: Sequence[tuple]) -> tuple:
    """Upper-hull vertices of a lifted point set."""
    gamma = min(p[-1] for p in points) - 1
    floor = {p[:-1] + (gamma,) for p in points}
    Q = convex_hull(list(points) + list(floor))
    return tuple(v for v in Q.vertices if v[-1] > gamma)


@dataclass(frozen=True)
class ConcavePWA:
    n: int
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise InvalidInput("a concave function needs at least one generator")
        if any(len(g) != self.n + 1 for g in self.generators):
            raise InvalidInput("generator of the wrong dimension")

    # derived geometry

    @cached_property
    def domain(self) -> Polytope:
        return convex_hull([g[:-1] for g in self.generators])

    @cached_property
    def lifted(self) -> Polytope:
        """``Conv`` of the generators, i.e. the hull of the graph."""
        return convex_hull(self.generators)

    def floored(self, gamma) -> Polytope:
        """``Conv(graph ∪ domain × {gamma})`` for ``gamma`` at most the minimum."""
        gamma = Fraction(gamma)
        if gamma > self.min_value:
            raise InvalidInput("floor level above the minimum of the function")
        base = [v + (gamma,) for v in self.domain.vertices]
        return convex_hull(list(self.generators) + base)

    @property
    def min_value(self) -> Fraction:
        return min(g[-1] for g in self.generators)

    @property
    def max_value(self) -> Fraction:
        return max(g[-1] for g in self.generators)

    @cached_property
    def _work_hull(self) -> Polytope:
        return self.floored(self.min_value - 1)

    @cached_property
    def _reduction(self):
        """Affine chart of the domain: (base point, pivot columns, chart function)."""
        D = self.domain
        base = D.vertices[0]
        ech = _RowEchelon(self.n)
        for v in D.vertices[1:]:
            ech.add([a - b for a, b in zip(v, base)])
        piv = ech.pivots
        chart = from_lifted_points([tuple(g[j] for j in piv) + (g[-1],) for g in self.generators])
        return base, ech, piv, chart

    # evaluation

    def __call__(self, u) -> Fraction:
        return self.evaluate(u)

    def evaluate(self, u) -> Fraction:
        if not isinstance(u, (tuple, list)):
            u = (u,)
        u = tuple(Fraction(x) for x in u)
        if len(u) != self.n:
            raise InvalidInput("evaluation point of the wrong dimension")
        D = self.domain
        if D.is_full:
            if self.n == 0:
                return self.generators[0][-1]
            for f in D.facets:
                if sum(a * b for a, b in zip(f.normal, u)) > f.offset:
                    raise InvalidInput("point outside the domain")
            Q = self._work_hull
            return min(
                (f.offset - sum(a * b for a, b in zip(f.normal, u))) / f.normal[-1]
                for f in Q.facets
                if f.normal[-1] > 0
            )
        base, ech, piv, chart = self._reduction
        diff = ech.reduce([a - b for a, b in zip(u, base)])
        if any(x != 0 for x in diff):
            raise InvalidInput("point outside the affine hull of the domain")
        return chart.evaluate(tuple(u[j] for j in piv))

    # integration

    def integral(self) -> Fraction:
        if self.n == 0:
            return self.generators[0][-1]
        if not self.domain.is_full:
            return Fraction(0)
        n = self.n
        total = Fraction(0)
        for simplex, _ in self._work_hull.upper_simplices():
            apex = simplex[0]
            m = [[q[j] - apex[j] for j in range(n)] for q in simplex[1:]]
            vol = abs(frac_det(m))
            if vol:
                total += vol * sum(q[-1] for q in simplex)
        return total / (factorial(n) * (n + 1))

    # transformations

    def add_constant(self, c) -> "ConcavePWA":
        c = Fraction(c)
        return ConcavePWA(self.n, tuple(g[:-1] + (g[-1] + c,) for g in self.generators))

    def scale_values(self, m) -> "ConcavePWA":
        m = Fraction(m)
        if m <= 0:
            raise InvalidInput("scaling factor must be positive")
        return ConcavePWA(self.n, tuple(g[:-1] + (g[-1] * m,) for g in self.generators))

    def restrict_to_face(self, u) -> "ConcavePWA":
        face = set(self.domain.face(u).vertices)
        D = convex_hull(face)
        keep = [g for g in self.generators if g[:-1] in face or _in_polytope(D, g[:-1])]
        return from_lifted_points(keep)

    def apply_linear(self, L: Sequence[Sequence[int]]) -> "ConcavePWA":
        """Precompose with ``L`` so that ``result(u) == self(L u)``."""
        Linv = _inverse(L, self.n)
        pts = []
        for g in self.generators:
            a = g[:-1]
            pts.append(tuple(sum(Linv[i][j] * a[j] for j in range(self.n)) for i in range(self.n)) + (g[-1],))
        return from_lifted_points(pts)

    def __str__(self):
        pts = ", ".join("(" + ", ".join(str(x) for x in g) + ")" for g in self.generators)
        return f"ConcavePWA(n={self.n}, generators=[{pts}])"


def _in_polytope(P: Polytope, x) -> bool:
    if len(P.vertices) == 1:
        return tuple(x) == P.vertices[0]
    if P.is_full:
        return all(sum(a * b for a, b in zip(f.normal, x)) <= f.offset for f in P.facets)
    try:
        from_lifted_points([v + (Fraction(0),) for v in P.vertices]).evaluate(x)
    except InvalidInput:
        return False
    return True


def _inverse(L, n):
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(L)]
    if len(m) != n or any(len(row) != 2 * n for row in m):
        raise InvalidInput("matrix of the wrong shape")
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise InvalidInput("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [row[n:] for row in m]


def determinant(L) -> Fraction:
    return frac_det([[Fraction(x) for x in row] for row in L])


# constructors and operations


def from_lifted_points(points: Iterable[Sequence]) -> ConcavePWA:
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise InvalidInput("a concave function needs at least one lifted point")
    n = len(pts[0]) - 1
    if n < 0 or any(len(p) != n + 1 for p in pts):
        raise InvalidInput("lifted points of inconsistent dimension")
    return ConcavePWA(n, _canonical(pts))


def constant_fn(Q: Polytope, c) -> ConcavePWA:
    c = Fraction(c)
    return ConcavePWA(Q.ambient, tuple(v + (c,) for v in Q.vertices))


def zero_fn(n: int) -> ConcavePWA:
    """The roof function of the zero polynomial: 0 on the origin."""
    return ConcavePWA(n, (tuple(Fraction(0) for _ in range(n + 1)),))


def sup_convolution(*fns: ConcavePWA) -> ConcavePWA:
    if not fns:
        raise InvalidInput("empty sup-convolution")
    n = fns[0].n
    if any(f.n != n for f in fns):
        raise InvalidInput("sup-convolution of functions in different dimensions")
    acc = set(fns[0].generators)
    for f in fns[1:]:
        acc = {tuple(a + b for a, b in zip(x, y)) for x in acc for y in f.generators}
        acc = set(_canonical(list(acc)))
    return ConcavePWA(n, tuple(sorted(acc)))


def integral(rho: ConcavePWA) -> Fraction:
    return rho.integral()


def evaluate(rho: ConcavePWA, u) -> Fraction:
    return rho.evaluate(u)


def add_constant(rho: ConcavePWA, c) -> ConcavePWA:
    return rho.add_constant(c)


def scale_values(rho: ConcavePWA, m) -> ConcavePWA:
    return rho.scale_values(m)


def restrict_to_face(rho: ConcavePWA, u) -> ConcavePWA:
    return rho.restrict_to_face(u)


def apply_linear(rho: ConcavePWA, L) -> ConcavePWA:
    return rho.apply_linear(L)


def envelopes(R: Polytope):
    """Upper envelope of ``R`` and the negation of its lower envelope."""
    upper = from_lifted_points(R.vertices)
    lower = from_lifted_points([v[:-1] + (-v[-1],) for v in R.vertices])
    return upper, lower


def domain_sum(fns: Sequence[ConcavePWA]) -> Polytope:
    return minkowski_sum(*(f.domain for f in fns))
