"""Exact convex polytopes in Q^d for small d.

Hulls are computed on integer-scaled coordinates with an incremental
beneath-beyond algorithm; lower-dimensional inputs are handled by running the
hull inside a coordinate projection that is injective on their affine hull.
Facet normals are primitive integer vectors, paired with lattice-normalized
face volumes so that every derived quantity stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import factorial, gcd, lcm
from typing import Iterable, Sequence

from .errors import InvalidInput, UnsupportedDimension

DEFAULT_MAX_DIM = 4
_max_dim = DEFAULT_MAX_DIM


def set_max_dim(d: int) -> None:
    """Change the dimension cap for hull computations (process-wide)."""
    global _max_dim
    _max_dim = int(d)


def get_max_dim() -> int:
    return _max_dim


# --------------------------------------------------------------------------
# small exact linear algebra


def _as_point(p) -> tuple:
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in p)


def int_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def frac_det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(m)
    a = [list(row) for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def primitive_vector(v: Sequence[int]) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise InvalidInput("zero vector has no primitive representative")
    return tuple(int(x) // g for x in v)


def rational_to_primitive(v: Sequence[Fraction]) -> tuple:
    """Positive multiple of a rational vector that is a primitive integer vector."""
    den = lcm(*(Fraction(x).denominator for x in v))
    return primitive_vector([int(Fraction(x) * den) for x in v])


def cross_normal(vectors: Sequence[Sequence[int]], d: int) -> tuple:
    """Generalized cross product of d-1 integer vectors in Z^d."""
    out = []
    for j in range(d):
        minor = [[row[c] for c in range(d) if c != j] for row in vectors]
        out.append((-1) ** j * int_det(minor))
    return tuple(out)


class _RowEchelon:
    """Incremental rank tracking of rational vectors."""

    def __init__(self, d):
        self.d = d
        self.rows = []  # (pivot column, normalized row)

    def reduce(self, v):
        v = [Fraction(x) for x in v]
        for piv, row in self.rows:
            c = v[piv]
            if c:
                for j in range(self.d):
                    v[j] -= c * row[j]
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        piv = next((j for j, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        c = v[piv]
        v = [x / c for x in v]
        # keep rows fully reduced so pivot columns stay unit vectors
        new_rows = []
        for p, row in self.rows:
            f = row[piv]
            if f:
                row = [a - f * b for a, b in zip(row, v)]
            new_rows.append((p, row))
        new_rows.append((piv, v))
        self.rows = new_rows
        return True

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(p for p, _ in self.rows)


def rank_of(vectors: Iterable[Sequence], d: int) -> int:
    ech = _RowEchelon(d)
    for v in vectors:
        ech.add(v)
        if ech.rank == d:
            break
    return ech.rank


def nullspace_vector(vectors: Sequence[Sequence], d: int) -> tuple:
    """Primitive integer generator of the orthogonal complement of a corank-1 family."""
    ech = _RowEchelon(d)
    for v in vectors:
        ech.add(v)
    if ech.rank != d - 1:
        raise InvalidInput("family does not have corank 1")
    pivots = {p for p, _ in ech.rows}
    free = next(j for j in range(d) if j not in pivots)
    w = [Fraction(0)] * d
    w[free] = Fraction(1)
    for p, row in ech.rows:
        w[p] = -row[free]
    return rational_to_primitive(w)


def _dot(u, x):
    return sum(a * b for a, b in zip(u, x))


# --------------------------------------------------------------------------
# hull of full-dimensional integer point sets


def _hull_full(pts: Sequence[tuple], k: int, seed_idx: Sequence[int]):
    """Beneath-beyond hull of integer points spanning Z^k (k >= 2).

    Returns (vertex indices, simplicial boundary facets as (indices, normal, offset)).
    """
    simplex = list(seed_idx)
    centroid_sum = [sum(pts[i][j] for i in simplex) for j in range(k)]
    scale = k + 1

    def make_facet(idx):
        base = pts[idx[0]]
        vecs = [[pts[i][j] - base[j] for j in range(k)] for i in idx[1:]]
        w = primitive_vector(cross_normal(vecs, k))
        off = _dot(w, base)
        if _dot(w, centroid_sum) > scale * off:
            w = tuple(-x for x in w)
            off = -off
        return (tuple(sorted(idx)), w, off)

    facets = [make_facet([simplex[j] for j in range(k + 1) if j != omit]) for omit in range(k + 1)]
    in_simplex = set(simplex)
    for pi, p in enumerate(pts):
        if pi in in_simplex:
            continue
        visible = [f for f in facets if _dot(f[1], p) > f[2]]
        if not visible:
            continue
        ridge_count: dict = {}
        for idx, _, _ in visible:
            for omit in range(k):
                ridge = idx[:omit] + idx[omit + 1:]
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        vis_ids = {id(f) for f in visible}
        facets = [f for f in facets if id(f) not in vis_ids]
        for ridge, cnt in ridge_count.items():
            if cnt == 1:
                facets.append(make_facet(list(ridge) + [pi]))

    candidates = sorted({i for f in facets for i in f[0]})
    by_point: dict = {i: set() for i in candidates}
    for idx, w, _ in facets:
        for i in idx:
            by_point[i].add(w)
    vertices = [i for i in candidates if rank_of(by_point[i], k) == k]
    return vertices, facets


@dataclass(frozen=True)
class Facet:
    normal: tuple  # primitive integer, outward
    offset: Fraction
    vertices: tuple  # points of the facet (extreme points only)


@dataclass(frozen=True)
class Face:
    """Vertices of a polytope maximizing a linear functional."""

    vertices: tuple
    direction: tuple

    @cached_property
    def polytope(self) -> "Polytope":
        return convex_hull(self.vertices)

    @property
    def dim(self) -> int:
        return self.polytope.dim


@dataclass(frozen=True, eq=False)
class Polytope:
    ambient: int
    vertices: tuple
    dim: int
    facets: tuple = ()
    _simplices: tuple = field(default=(), repr=False)
    _basis: tuple = field(default=(), repr=False)

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.ambient == other.ambient and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.ambient, self.vertices))

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient

    @cached_property
    def volume(self) -> Fraction:
        if self.ambient == 0:
            return Fraction(1)
        if not self.is_full:
            return Fraction(0)
        d = self.ambient
        apex = self.vertices[0]
        total = Fraction(0)
        for simplex, _ in self._simplices:
            m = [[q[j] - apex[j] for j in range(d)] for q in simplex]
            total += abs(frac_det(m))
        return total / factorial(d)

    def support(self, u) -> Fraction:
        return max(_dot(u, v) for v in self.vertices)

    def face(self, u) -> Face:
        if all(x == 0 for x in u):
            raise InvalidInput("face direction must be nonzero")
        h = self.support(u)
        return Face(tuple(v for v in self.vertices if _dot(u, v) == h), tuple(u))

    @cached_property
    def hyperplane_normal(self) -> tuple:
        """Primitive normal of the affine hull when ``dim == ambient - 1``."""
        if self.dim != self.ambient - 1:
            raise InvalidInput("polytope is not of codimension 1")
        base = self.vertices[0]
        diffs = [[a - b for a, b in zip(v, base)] for v in self._basis]
        return nullspace_vector(diffs, self.ambient)

    def codim1_directions(self) -> list:
        """Primitive directions whose face has dimension ``ambient - 1``.

        For a full-dimensional polytope these are the facet normals; for a
        polytope of codimension one they are the two normals of its affine hull.
        """
        if self.is_full:
            return [(f.normal, Face(f.vertices, f.normal)) for f in self.facets]
        if self.dim == self.ambient - 1:
            w = self.hyperplane_normal
            face = Face(self.vertices, w)
            neg = tuple(-x for x in w)
            return [(w, face), (neg, Face(self.vertices, neg))]
        return []

    def upper_simplices(self):
        """Boundary simplices whose outward normal has positive last coordinate."""
        return [(s, w) for s, w in self._simplices if w[-1] > 0]

    def __repr__(self):
        verts = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, vertices=[{verts}])"


def convex_hull(points: Iterable[Sequence], max_dim: int | None = None) -> Polytope:
    pts = sorted({_as_point(p) for p in points})
    if not pts:
        raise InvalidInput("convex hull of an empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise InvalidInput("points of different dimensions")
    cap = _max_dim if max_dim is None else max_dim
    if d > cap:
        raise UnsupportedDimension(f"ambient dimension {d} exceeds the cap {cap}")
    if d == 0 or len(pts) == 1:
        return Polytope(d, (pts[0],), 0, _basis=())

    den = lcm(*(x.denominator for p in pts for x in p))
    ipts = [tuple(int(x * den) for x in p) for p in pts]
    base = ipts[0]
    ech = _RowEchelon(d)
    seed = [0]
    for i, p in enumerate(ipts[1:], start=1):
        if ech.add([a - b for a, b in zip(p, base)]):
            seed.append(i)
            if ech.rank == d:
                break
    k = ech.rank
    basis = tuple(pts[i] for i in seed[1:])
    if k == 1:
        j = ech.pivots[0]
        lo = min(range(len(pts)), key=lambda i: ipts[i][j])
        hi = max(range(len(pts)), key=lambda i: ipts[i][j])
        verts = tuple(sorted({pts[lo], pts[hi]}))
        simplices = ()
        facets = ()
        if d == 1:
            facets = (
                Facet((-1,), -pts[lo][0], (pts[lo],)),
                Facet((1,), pts[hi][0], (pts[hi],)),
            )
            simplices = (((pts[lo],), (-1,)), ((pts[hi],), (1,)))
        return Polytope(d, verts, 1, facets, simplices, basis)

    piv = ech.pivots
    proj = [tuple(p[j] for j in piv) for p in ipts]
    vidx, sfacets = _hull_full(proj, k, seed)
    verts = tuple(sorted(pts[i] for i in vidx))
    if k < d:
        return Polytope(d, verts, k, (), (), basis)

    simplices = tuple((tuple(pts[i] for i in idx), w) for idx, w, _ in sfacets)
    merged: dict = {}
    for _, w, off in sfacets:
        merged[w] = Fraction(off, den)
    vset = [pts[i] for i in vidx]
    facets = tuple(
        Facet(w, off, tuple(v for v in vset if _dot(w, v) == off))
        for w, off in sorted(merged.items())
    )
    return Polytope(d, verts, d, facets, simplices, basis)


# --------------------------------------------------------------------------
# operations


def minkowski_sum(*polys: Polytope) -> Polytope:
    if not polys:
        raise InvalidInput("empty Minkowski sum")
    d = polys[0].ambient
    if any(P.ambient != d for P in polys):
        raise InvalidInput("Minkowski sum of polytopes in different dimensions")
    pts = {tuple(Fraction(0) for _ in range(d))}
    for P in polys:
        pts = {tuple(a + b for a, b in zip(x, v)) for x in pts for v in P.vertices}
        if len(pts) > 64:
            pts = set(convex_hull(pts).vertices)
    return convex_hull(pts)


def volume(P: Polytope) -> Fraction:
    return P.volume


def support_value(P: Polytope, u) -> Fraction:
    if all(x == 0 for x in u):
        raise InvalidInput("support direction must be nonzero")
    return P.support(u)


def face_in_direction(P: Polytope, u) -> Face:
    return P.face(u)


def facet_normals(P: Polytope) -> list:
    return [f.normal for f in P.facets]


def upper_facets(P: Polytope) -> list:
    """Facets of the upper envelope: ``(normal, Face)`` with normal[-1] > 0."""
    return [(w, face) for w, face in P.codim1_directions() if w[-1] > 0]


def drop_coordinate(points: Iterable[Sequence], k: int) -> list:
    return [tuple(x for j, x in enumerate(p) if j != k) for p in points]


def projection_index(u: Sequence[int]) -> int:
    """Coordinate to drop when flattening a hyperplane with normal ``u``."""
    best = None
    for j, x in enumerate(u):
        if x != 0 and (best is None or abs(x) < abs(u[best])):
            best = j
    if best is None:
        raise InvalidInput("zero normal")
    return best


def lattice_face_volume(face: Face | Sequence[Sequence], u: Sequence[int]) -> Fraction:
    """Volume of a face inside ``<u, x> = h`` normalized to the lattice Z^d ∩ u^⊥."""
    verts = face.vertices if isinstance(face, Face) else [_as_point(v) for v in face]
    u = tuple(int(x) for x in u)
    if primitive_vector(u) != u and primitive_vector(u) != tuple(-x for x in u):
        raise InvalidInput("normal must be primitive")
    h = _dot(u, verts[0])
    if any(_dot(u, v) != h for v in verts):
        raise InvalidInput("normal is not constant on the face")
    k = projection_index(u)
    flat = convex_hull(drop_coordinate(verts, k))
    return flat.volume / abs(u[k])
