import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rootbound.algebra import LaurentSystem, LaurentTerm, UniPoly, collapse, parse_system
from rootbound.errors import CommonComponent, Inconclusive, InvalidInput, UnsupportedDimension
from rootbound.oracle import count_roots_n1, resultant_t, verify_claimed_root

from systems import S, eight_root_system, unmixed_system, single_root_family, random_n1_system, times_poly

s_sym, t_sym = sympy.symbols("s t")


def to_sympy(poly):
    out = 0
    for term in poly:
        c = sum(sympy.Rational(x.numerator, x.denominator) * s_sym ** k for k, x in enumerate(term.coeff.coeffs))
        out += c * t_sym ** term.exponent[0]
    return sympy.expand(out)


def sympy_count(system):
    """Torus roots with multiplicity from a lex Groebner basis (an independent check)."""
    f, g = (to_sympy(p) for p in collapse(system).polys)
    low = min(min(t.exponent[0] for t in p) for p in collapse(system).polys)
    if low < 0:
        f, g = sympy.expand(f * t_sym ** -low), sympy.expand(g * t_sym ** -low)
    # saturate by t, then count points of the zero-dimensional ideal
    u = sympy.Symbol("u")
    G = sympy.groebner([f, g, u * t_sym - 1], u, t_sym, s_sym, order="lex")
    basis = [p for p in G.exprs if not p.has(u)]
    G2 = sympy.groebner(basis, t_sym, s_sym, order="grevlex")
    return len(G2.exprs) and _vector_space_dim(G2)


def _vector_space_dim(G):
    leads = [sympy.Poly(p, t_sym, s_sym).monoms(order="grevlex")[0] for p in G.exprs]
    count = 0
    for a in range(60):
        for b in range(60):
            if not any(a >= x and b >= y for x, y in leads):
                count += 1
    return count


def test_resultant_examples():
    assert resultant_t([UniPoly([0, -1]), 1], [-1, 1]).monic() == S - 1
    assert resultant_t([-1, S], [-S, 1]).monic() == S * S - 1


def test_resultant_example_61_factors():
    a = [UniPoly([-1, 1]), UniPoly([1, -2, 1]), UniPoly([0, -3])]
    b = [UniPoly([7, -7]), UniPoly([1, -2, 1]), UniPoly([0, 3])]
    R = resultant_t(a, b)
    core = UniPoly([-4, -15, -12, 4])
    assert core.divides(R)
    rest = R.exact_div(core)
    for p in (S, S - 1):
        while p.divides(rest):
            rest = rest.exact_div(p)
    assert rest.is_constant()


def test_resultant_matches_sympy():
    system = unmixed_system()
    a, b = (to_sympy(p) for p in system.polys)
    expected = sympy.Poly(sympy.resultant(a, b, t_sym), s_sym)
    coeffs = []
    for p in system.polys:
        row = [UniPoly()] * 3
        for term in p:
            row[term.exponent[0]] = term.coeff
        coeffs.append(row)
    ours = resultant_t(*coeffs)
    assert [Fraction(str(c)) for c in reversed(expected.all_coeffs())] == list(ours.coeffs)


def test_resultant_needs_t():
    with pytest.raises(InvalidInput):
        resultant_t([S], [S, 1])


def test_count_example():
    result = count_roots_n1(unmixed_system())
    assert result.count == 3 and result.valid
    assert dict((str(q), st) for q, st in result.unclean)["s"] == "resolved"


def test_count_simple():
    assert count_roots_n1(parse_system("f0 = s*t - 1\nf1 = t - s")).count == 2


def test_common_component():
    with pytest.raises(CommonComponent):
        count_roots_n1(parse_system("f0 = t - 1\nf1 = 2*t - 2"))


def test_two_variables_unsupported():
    with pytest.raises(UnsupportedDimension):
        count_roots_n1(parse_system("f0 = t1\nf1 = t2\nf2 = t1 + t2"))


def test_claimed_roots():
    system = unmixed_system()
    assert verify_claimed_root(system, 4, 1, 1)
    assert verify_claimed_root(system, Fraction(-1, 2), -2, 2)
    assert not verify_claimed_root(system, 4, 1, 2)
    assert not verify_claimed_root(system, 0, 1, 1)
    assert not verify_claimed_root(system, 0, 1, 2)


def test_claimed_root_on_unclean_fiber():
    system = parse_system("f0 = (s-1)*t^2 + t - 1\nf1 = (s-1)*t^2 + 2*t - 2")
    with pytest.raises(Inconclusive):
        verify_claimed_root(system, 1, 1, 1)


def test_flagged_fiber():
    # both leading coefficients vanish at s = 0 and the fibers share t = 1
    system = parse_system("f0 = -1 + t + s*t^2\nf1 = 1 - t + s*t^3")
    result = count_roots_n1(system)
    assert not result.valid
    assert [st for _, st in result.unclean] == ["flagged"]


@pytest.mark.parametrize("system", [unmixed_system(), eight_root_system(), single_root_family(1), single_root_family(2)], ids=["unmixed", "eight", "k1", "k2"])
def test_counts_match_groebner(system):
    assert count_roots_n1(system).count == sympy_count(system)


def test_base_fiber_roots_counted():
    system = times_poly(unmixed_system(), 0, S - 2)
    assert count_roots_n1(system).count == 5 == sympy_count(system)


def _rescaled(system, c):
    return LaurentSystem(1, tuple(
        tuple(LaurentTerm(t.exponent, t.coeff * Fraction(c) ** t.exponent[0]) for t in p) for p in system.polys
    ))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(-3, 3).filter(bool), st.integers(1, 4))
def test_oracle_symmetries(seed, c, unit):
    system = random_n1_system(random.Random(seed))
    if system is None:
        return
    try:
        base = count_roots_n1(system)
    except CommonComponent:
        return
    swapped = LaurentSystem(1, system.polys[::-1])
    assert count_roots_n1(swapped).count == base.count
    scaled = times_poly(system, 0, UniPoly.const(unit))
    assert count_roots_n1(scaled).count == base.count
    assert count_roots_n1(_rescaled(system, Fraction(c))).count == base.count


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_random_counts_match_groebner(seed):
    system = random_n1_system(random.Random(seed))
    if system is None:
        return
    try:
        result = count_roots_n1(system)
    except CommonComponent:
        return
    if result.valid:
        assert result.count == sympy_count(system)
