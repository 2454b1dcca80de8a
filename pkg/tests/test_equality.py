from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootbound.adelic import roof
from rootbound.algebra.upoly import ord_place
from rootbound.algebra import INF, UniPoly, parse_system
from rootbound.equality import (
    GENERIC,
    equality_certificate,
    initial_system,
    initial_system_at_factor,
    slopes_at_place,
    solvable_in_torus_n1,
)
from rootbound.errors import ExtensionFieldNeeded

from systems import S, eight_root_system, unmixed_system, single_root_family


def kinds(families, i=0):
    vertex = sum(1 for f in families if len(f.faces[i]) == 1)
    return vertex, len(families) - vertex


def test_slopes_at_zero():
    fams = slopes_at_place(unmixed_system(), 0)
    # the three vertices and two upper edges of the lifted polytope of f0
    assert kinds(fams) == (3, 2)
    assert [f.zero_only for f in fams].count(True) == 1


def test_slopes_at_one():
    fams = [f for f in slopes_at_place(unmixed_system(), 1) if not f.zero_only]
    assert kinds(fams) == (2, 1)
    edge = next(f for f in fams if len(f.faces[0]) == 2)
    assert edge.tau == (Fraction(-1, 2),)


def test_generic_slopes_are_faces_of_newton_polytope():
    fams = slopes_at_place(unmixed_system(), GENERIC)
    faces = {f.faces[0] for f in fams if any(f.tau)}
    assert faces == {(0,), (2,)}


def test_initial_systems():
    system = unmixed_system()
    assert str(initial_system(system, 0, [0])) == "{-1 + t, 7 + t}"
    assert str(initial_system(system, INF, [0])) == "{t, t}"
    init = initial_system(system, 1, [-3])
    assert all(len(p) == 1 for p in init.polys)


def test_solvable_in_torus():
    assert not solvable_in_torus_n1([[(0, -1), (1, 1)], [(0, 7), (1, 1)]])
    assert solvable_in_torus_n1([[(1, 1), (0, -1)], [(2, 1), (0, -1)]])
    assert not solvable_in_torus_n1([[(2, 1)], [(3, 1)]])


def test_certificates():
    assert equality_certificate(unmixed_system()).certified
    assert equality_certificate(eight_root_system()).certified
    assert equality_certificate(single_root_family(2)).certified


def test_equal_polynomials_are_inconclusive():
    system = parse_system("f0 = (s-1) + t\nf1 = (s-1) + t")
    cert = equality_certificate(system)
    assert cert.verdict == "inconclusive"
    assert any("inf" in ob for ob in cert.obstructions)


def test_two_variables_inconclusive_with_listing():
    system = parse_system("f0 = 1 + t1 + t2\nf1 = s + t1 - t2\nf2 = 1 - s*t1 + t2")
    cert = equality_certificate(system)
    assert cert.verdict == "inconclusive"
    assert any(init.place == GENERIC for init in cert.initial_systems)


def test_irrational_place():
    system = parse_system("f0 = (s^2+1) + t\nf1 = 1 + s*t^2")
    with pytest.raises(ExtensionFieldNeeded):
        initial_system_at_factor(system, S * S + 1, [1])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([0, 1, INF]), st.integers(-9, 9), st.integers(1, 4))
def test_initial_terms_are_the_tau_one_face(v, num, den):
    system = unmixed_system()
    tau = Fraction(num, den)
    init = initial_system(system, v, [tau])
    for f, terms in zip(system.polys, init.polys):
        # direct maximization of tau*a - ord_v(alpha) over the terms
        values = {t.exponent: tau * t.exponent[0] - ord_place(t.coeff, v) for t in f}
        top = max(values.values())
        assert {e for e, _ in terms} == {e for e, x in values.items() if x == top}


def test_large_multiples_give_the_specialized_face():
    # for large lambda the (lambda*tau, 1)-face sits inside the terms not vanishing at v
    system = unmixed_system()
    init = initial_system(system, 0, [100])
    assert init.polys == ((((2,), Fraction(-3)),), (((2,), Fraction(3)),))


def test_slope_completeness():
    system = unmixed_system()
    for v in (0, 1, INF):
        fams = slopes_at_place(system, v)
        taus = [f.tau for f in fams]
        assert len(set(taus)) == len(taus)
        for i, f in enumerate(system.polys):
            covered = set().union(*(fam.faces[i] for fam in fams))
            upper = {p[:-1] for p in roof(f, v).generators}
            assert {f[j].exponent for j in covered} == upper


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(-4, 4)), min_size=1, max_size=4),
       st.lists(st.tuples(st.integers(0, 3), st.integers(-4, 4)), min_size=1, max_size=4),
       st.integers(1, 3), st.integers(-2, 2).filter(bool))
def test_solvability_invariant_under_rescaling(p, q, c, m):
    # t -> c*t together with a common rescaling of each polynomial
    scale = Fraction(c)
    p2 = [(e, a * m * scale ** e) for e, a in p]
    q2 = [(e, a * scale ** e) for e, a in q]
    assert solvable_in_torus_n1([p, q]) == solvable_in_torus_n1([p2, q2])
