import pytest
from hypothesis import given, settings, strategies as st

from ddaha.afw import AffineWeight
from ddaha.classify import (
    Multisegment, from_multisegments, same_simple, sigma_matrix, to_multisegments, xi_to_param,
    zeta, zeta_coords,
)
from ddaha.params import AffineSymElement, ParamPair, domain_membership, dot_act_pair


def test_zeta_example():
    pp = ParamPair(3, (2, 1), (0, 0))
    assert zeta_coords(pp) == (0, 1, -1)
    assert zeta(pp) == AffineWeight((0, 1, -1), 3, 0)


def test_zeta_rejects_outside_I():
    with pytest.raises(ValueError):
        zeta_coords(ParamPair(3, (0, 1), (1, 0)))


def test_multisegment_example():
    ms = to_multisegments(ParamPair(3, (2, 1), (0, 0)))
    assert ms.segments == ((0, 1), (2, 2))
    assert ms.dim == 3
    assert sigma_matrix(ms)[(0, 1)] == 1
    assert sigma_matrix(ms)[(1, 1)] == 0


def test_multisegment_validation():
    with pytest.raises(ValueError):
        Multisegment(3, ((3, 4),))
    with pytest.raises(ValueError):
        Multisegment(0, ())
    assert Multisegment.from_json(Multisegment(3, ((2, 2), (0, 1))).to_json()).segments == ((0, 1), (2, 2))


def test_varpi_translate_has_same_multisegments():
    pp = ParamPair(3, (2, 1), (0, 0))
    other = dot_act_pair(AffineSymElement.varpi(2), pp)
    assert other == ParamPair(3, (3, 3), (2, 1))
    assert to_multisegments(other) == to_multisegments(pp)
    assert same_simple(pp, other)


def test_xi_to_param_example():
    pp, h = xi_to_param(AffineWeight((0, 1, -1), 3, 0))
    assert pp == ParamPair(3, (2, 1), (0, 0)) and h == 2


def test_xi_to_param_rejects_fractional():
    from fractions import Fraction
    with pytest.raises(ValueError):
        xi_to_param(AffineWeight((Fraction(1, 2),), 3, 0))


def test_single_segment():
    ms = to_multisegments(ParamPair(3, (3,), (1,)))
    assert ms.segments == ((1, 2),)
    assert from_multisegments(ms) == ParamPair(3, (3,), (1,))


def test_same_simple_needs_fundamental_domain():
    with pytest.raises(ValueError):
        same_simple(ParamPair(3, (0, 2), (-1, 1)), ParamPair(3, (2, 1), (0, 0)))


kappas = st.integers(1, 4)
pairs = st.tuples(kappas, st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), min_size=1, max_size=3)).map(
    lambda t: ParamPair(t[0], tuple(m + d for m, d in t[1]), tuple(m for m, _ in t[1])))


@settings(max_examples=80, deadline=None)
@given(pairs)
def test_round_trip_to_canonical(pp):
    canon = from_multisegments(to_multisegments(pp))
    assert domain_membership(canon).I_kappa_star_plus
    assert to_multisegments(canon) == to_multisegments(pp)


@settings(max_examples=80, deadline=None)
@given(pairs, st.data())
def test_multisegments_are_orbit_invariant(pp, data):
    from ddaha.params import generators
    g = data.draw(st.sampled_from(generators(pp.p, with_translations=True)))
    assert to_multisegments(dot_act_pair(g, pp)) == to_multisegments(pp)


@settings(max_examples=80, deadline=None)
@given(pairs)
def test_xi_to_param_inverts_zeta_on_domain(pp):
    canon = from_multisegments(to_multisegments(pp))
    back, h = xi_to_param(zeta(canon))
    # adjacent blocks that continue each other merge into one run
    assert zeta_coords(back) == zeta_coords(canon)
    if all(canon.mu[i + 1] != canon.lam[i] + 1 for i in range(canon.p - 1)):
        assert back == canon and h == canon.p
