"""Randomized suites with at least 200 cases each over n in {1, 2}.

They are driven by the acceptance test; each function runs a full
hypothesis search when called.
"""

from fractions import Fraction
from itertools import product
from math import factorial

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from rootbound.adelic import bound_mainthm, positivity_predicate
from rootbound.algebra import LaurentSystem, LaurentTerm, UniPoly
from rootbound.algebra.laurent import content
from rootbound.concave import envelopes, sup_convolution
from rootbound.mixed import (
    constant_family,
    linear_identity_check,
    mixed_integral_dec,
    mixed_integral_def,
    mixed_integral_mv,
    mixed_volume_dec,
    mixed_volume_ie,
    permanent_mi,
    translation_identity_check,
)
from rootbound.polytope import convex_hull

from strategies import lattice_points, lattice_polytope, roof_family

CASES = settings(max_examples=200, deadline=None, suppress_health_check=list(HealthCheck))
dims = st.sampled_from([1, 1, 2])


@CASES
@given(roof_family())
def three_route_agreement(fns):
    assert mixed_integral_dec(*fns) == mixed_integral_def(*fns) == mixed_integral_mv(*fns)


@CASES
@given(dims.flatmap(lambda n: st.lists(lattice_polytope(n, max_size=4), min_size=n, max_size=n)))
def mv_routes(polys):
    n = len(polys)
    assert mixed_volume_ie(*polys) == mixed_volume_dec(*polys)
    Q = polys[0]
    assert mixed_volume_dec(*([Q] * n)) == factorial(n) * Q.volume


@CASES
@given(roof_family(), st.randoms(use_true_random=False))
def symmetry_and_linearity(fns, rnd):
    base = mixed_integral_dec(*fns)
    shuffled = list(fns)
    rnd.shuffle(shuffled)
    assert mixed_integral_dec(*shuffled) == base
    extra = fns[rnd.randrange(len(fns))]
    merged = [sup_convolution(fns[0], extra)] + list(fns[1:])
    assert mixed_integral_dec(*merged) == base + mixed_integral_dec(extra, *fns[1:])


@CASES
@given(roof_family(), st.lists(st.fractions(-3, 3, max_denominator=3), min_size=3, max_size=3))
def translation_formula(fns, deltas):
    deltas = deltas[: len(fns)]
    moved = [f.add_constant(d) for f, d in zip(fns, deltas)]
    assert mixed_integral_dec(*moved) == translation_identity_check(fns, deltas)


MATRICES = {
    1: [((1,),), ((-1,),), ((2,),), ((3,),)],
    2: [((1, 1), (0, 1)), ((2, 1), (1, 3)), ((0, -1), (1, 0)), ((2, 0), (0, 3)), ((1, 2), (3, 4))],
}


@CASES
@given(dims.flatmap(lambda n: st.tuples(roof_family(n), st.sampled_from(MATRICES[n]))))
def det_scaling(data):
    fns, L = data
    changed = [f.apply_linear(L) for f in fns]
    assert mixed_integral_dec(*changed) == linear_identity_check(fns, L)


@CASES
@given(dims.flatmap(lambda n: st.lists(lattice_polytope(n + 1, hi=2, max_size=5), min_size=n + 1, max_size=n + 1)))
def bagne_recomposition(polys):
    uppers, lowers = zip(*(envelopes(P) for P in polys))
    assert mixed_integral_dec(*uppers) + mixed_integral_dec(*lowers) == mixed_volume_dec(*polys)


@st.composite
def box_data(draw):
    n = draw(dims)
    boxes = [[draw(st.integers(1, 3)) for _ in range(n)] for _ in range(n + 1)]
    constants = [draw(st.integers(-3, 3)) for _ in range(n + 1)]
    forms = None
    if n == 2 and draw(st.booleans()):
        forms = draw(st.sampled_from([[[1, 1], [0, 1]], [[2, 1], [1, 1]], [[1, 0], [1, 2]]]))
    return boxes, constants, forms


@CASES
@given(box_data())
def permanent_formula(data):
    boxes, constants, forms = data
    fns = constant_family(boxes, constants, forms)
    assert mixed_integral_dec(*fns) == permanent_mi(boxes, constants, forms)


S = UniPoly([0, 1])
FACTORS = [UniPoly.const(1), UniPoly.const(2), UniPoly.const(-3), S, S - 1, S + 1, S * S + 1]


@st.composite
def primitive_system(draw):
    n = draw(dims)
    cube = list(product(range(3), repeat=n))
    polys = []
    for _ in range(n + 1):
        pts = sorted(draw(st.sets(st.sampled_from(cube), min_size=1, max_size=3)))
        terms = []
        for p in pts:
            c = UniPoly.const(1)
            for q in draw(st.lists(st.sampled_from(FACTORS), max_size=2)):
                c = c * q
            terms.append(LaurentTerm(p, c))
        g = content(terms)
        polys.append(tuple(LaurentTerm(t.exponent, t.coeff.exact_div(g)) for t in terms))
    return LaurentSystem(n, tuple(polys))


@CASES
@given(primitive_system())
def place_integrality_and_signs(system):
    report = bound_mainthm(system)
    for c in report.places:
        assert c.mi.denominator == 1 and c.mi <= 0
    assert report.mi_infinity.denominator == 1 and report.mi_infinity >= 0
    assert report.bound.denominator == 1 and report.bound >= 0


@CASES
@given(primitive_system())
def positivity_matches_bound(system):
    assert positivity_predicate(system) == (bound_mainthm(system).bound > 0)


SUITES = [
    three_route_agreement,
    mv_routes,
    symmetry_and_linearity,
    translation_formula,
    det_scaling,
    bagne_recomposition,
    permanent_formula,
    place_integrality_and_signs,
    positivity_matches_bound,
]
