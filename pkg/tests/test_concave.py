from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootbound.concave import constant_fn, envelopes, from_lifted_points, sup_convolution, zero_fn
from rootbound.errors import InvalidInput
from rootbound.polytope import convex_hull, minkowski_sum

from strategies import lattice_polytope, roof_fn

THETA0 = from_lifted_points([(0, 0), (1, 0), (2, -1)])
THETA_INF = from_lifted_points([(0, 1), (1, 2), (2, 1)])
THETA1 = from_lifted_points([(0, -1), (1, -2), (2, 0)])


def test_roof_values():
    assert THETA0(0) == 0 and THETA0(1) == 0 and THETA0(Fraction(3, 2)) == Fraction(-1, 2)
    assert THETA_INF(1) == 2


def test_outside_domain():
    with pytest.raises(InvalidInput):
        THETA0(3)


def test_zero_function():
    assert constant_fn(convex_hull([(0,)]), 0) == zero_fn(1)


def test_sup_convolution_linear():
    rho = from_lifted_points([(0, 0), (2, 6)])
    assert sup_convolution(rho, rho) == from_lifted_points([(0, 0), (4, 12)])


def test_sup_convolution_tent():
    up = from_lifted_points([(0, 0), (1, 1)])
    down = from_lifted_points([(0, 1), (1, 0)])
    tent = sup_convolution(up, down)
    assert tent == from_lifted_points([(0, 1), (1, 2), (2, 1)])


def test_sup_convolution_worked():
    rho = from_lifted_points([(0, 1), (Fraction(1, 2), 2), (3, 2)])
    sigma = from_lifted_points([(0, -1), (1, 1), (2, 1)])
    conv = sup_convolution(rho, sigma)
    assert conv == from_lifted_points([(0, 0), (Fraction(3, 2), 3), (5, 3)])


def test_integrals():
    assert THETA0.integral() == Fraction(-1, 2)
    assert THETA_INF.integral() == 3
    assert THETA1.integral() == -1


def test_operations():
    assert THETA0.scale_values(2) == from_lifted_points([(0, 0), (1, 0), (2, -2)])
    assert THETA_INF.restrict_to_face((1,)) == from_lifted_points([(2, 1)])
    assert THETA0.add_constant(1).integral() == Fraction(3, 2)


def test_envelopes_of_square():
    R = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    up, low = envelopes(R)
    assert up == from_lifted_points([(0, 1), (1, 1)])
    assert low == from_lifted_points([(0, 0), (1, 0)])


# properties

fns1 = roof_fn(1)
fns2 = roof_fn(2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([1, 2]).flatmap(lambda n: st.tuples(roof_fn(n), roof_fn(n), roof_fn(n))))
def test_sup_convolution_commutative_associative(triple):
    a, b, c = triple
    assert sup_convolution(a, b) == sup_convolution(b, a)
    assert sup_convolution(sup_convolution(a, b), c) == sup_convolution(a, sup_convolution(b, c))


@settings(max_examples=60, deadline=None)
@given(fns1, fns1)
def test_sup_convolution_pointwise(a, b):
    conv = sup_convolution(a, b)
    assert conv.domain == minkowski_sum(a.domain, b.domain)
    # breakpoints of the convolution sit at sums of breakpoints, so test there
    xs = sorted({g[0] for g in a.generators} | {g[0] for g in b.generators})
    for x in {p + q for p in xs for q in xs}:
        if not conv.domain.vertices[0][0] <= x <= conv.domain.vertices[-1][0]:
            continue
        best = None
        for v in xs + [x - q for q in xs]:
            if a.domain.vertices[0][0] <= v <= a.domain.vertices[-1][0] and \
                    b.domain.vertices[0][0] <= x - v <= b.domain.vertices[-1][0]:
                value = a(v) + b(x - v)
                best = value if best is None else max(best, value)
        assert conv(x) == best


@settings(max_examples=60, deadline=None)
@given(fns2, fns2)
def test_sup_convolution_domain(a, b):
    assert sup_convolution(a, b).domain == minkowski_sum(a.domain, b.domain)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([1, 2]).flatmap(roof_fn), st.fractions(-3, 3, max_denominator=4))
def test_integral_add_constant(rho, c):
    assert rho.add_constant(c).integral() == rho.integral() + c * rho.domain.volume


@settings(max_examples=60, deadline=None)
@given(fns2, st.sampled_from([((1, 1), (0, 1)), ((2, 1), (1, 3)), ((0, -1), (1, 0)), ((2, 0), (0, 3))]))
def test_integral_linear_change(rho, L):
    det = L[0][0] * L[1][1] - L[0][1] * L[1][0]
    assert rho.apply_linear(L).integral() == rho.integral() / abs(det)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3]).flatmap(lambda d: lattice_polytope(d, max_size=6)))
def test_envelopes_recompose(R):
    up, low = envelopes(R)
    pts = list(up.generators) + [g[:-1] + (-g[-1],) for g in low.generators]
    assert convex_hull(pts) == R
