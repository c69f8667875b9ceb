from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ddaha.afw import (
    AffineCoweight, AffinePermutation, AffineWeight, Root, act_coweight, act_root,
    act_weight, act_weight_affine, coset_decompose, coweight_form, enumerate_WI_min,
    eps_coweight, eps_weight, finite_min_coset_reps, identity, inversion_set,
    is_min_coset_rep, length, pi, reduced_word, simple_reflection, translation,
    weight_form, weight_pairing, y_eta,
)

s = simple_reflection


def test_window_examples():
    assert s(3, 0).window == (0, 2, 4)
    assert s(3, 1).window == (2, 1, 3)
    assert pi(3).window == (2, 3, 4)
    assert translation((1, 0, -1)).window == (4, 2, 0)
    assert (s(3, 0) * s(3, 1)).window == (2, 0, 4)


def test_invalid_window():
    with pytest.raises(ValueError):
        AffinePermutation((1, 4, 3))
    with pytest.raises(IndexError):
        s(3, 3)


def test_evaluation_off_window():
    w = s(3, 0)
    assert w(4) == w(1) + 3
    assert w(-2) == w(1) - 3


def test_pi_power_and_parts():
    w = translation((1, -1, 0)) * s(3, 1) * pi(3, 2)
    assert w.pi_power == 2
    assert not w.is_finite()
    assert s(3, 2).is_finite()
    assert translation((2, 0, -1)).translation_part() == (2, 0, -1)


def test_inverse_and_power():
    w = translation((1, 0, -1)) * s(3, 2) * pi(3)
    assert w * w.inverse() == identity(3)
    assert pi(3) ** 3 == translation((1, 1, 1))
    assert w ** -2 == w.inverse() * w.inverse()


def test_length_examples():
    assert length(identity(4)) == 0
    assert length(pi(4)) == 0
    assert length(s(3, 0) * s(3, 1)) == 2
    # t_(1,0,-1) has length 2 * <2 rho, eta> = 4
    assert length(translation((1, 0, -1))) == 4


def test_inversion_set_example():
    inv = inversion_set(s(3, 0) * s(3, 1))
    assert sorted(str(r) for r in inv) == ["alpha_{1,2}", "alpha_{3,5}"]


def test_reduced_word_example():
    w = pi(3) * s(3, 2) * s(3, 1)
    assert w.window == (4, 2, 3)
    rw = reduced_word(w)
    assert str(rw) == "pi*s2*s1"
    assert rw.evaluate() == w


def test_coset_decompose_example():
    w1, u = coset_decompose(s(3, 2) * s(3, 1), [1])
    assert w1 == s(3, 2) and u == s(3, 1)
    assert is_min_coset_rep(w1, [1])


def test_y_eta_examples():
    assert y_eta((0, 0, 0)) == identity(3)
    assert y_eta((1, 0, -1)).window == (3, 2, 1)
    # stable: equal entries keep their order
    assert y_eta((2, -1, 2)).window == (2, 1, 3)


def test_finite_min_coset_reps_count():
    assert len(finite_min_coset_reps(4, [1, 3])) == 6
    assert len(finite_min_coset_reps(3, [])) == 6
    assert [w.window for w in finite_min_coset_reps(3, [1])] == [(1, 2, 3), (1, 3, 2), (2, 3, 1)]


def test_enumerate_WI_min_bound_zero():
    assert list(enumerate_WI_min(3, [1], length_bound=0)) == [identity(3)]


def test_weight_and_coweight_actions():
    eps1 = eps_weight(3, 1)
    # s_0 sends 1 to 0, and eps_0 = eps_3 + delta
    assert act_weight(s(3, 0), eps1) == AffineWeight((0, 0, 1), 0, 1)
    d = AffineCoweight((0, 0, 0), 0, 1)
    moved = act_coweight(translation((1, 0, 0)), d)
    assert moved.c == Fraction(-1, 2)
    assert weight_pairing(eps1, eps_coweight(3, 1)) == 1


def test_affine_action_rejects_delta():
    with pytest.raises(ValueError):
        act_weight_affine(s(3, 1), AffineWeight((0, 0, 0), 1, 1))


def test_affine_action_adds_kappa_eta():
    z = AffineWeight((0, 1, -1), 3, 0)
    out = act_weight_affine(translation((1, 0, 0)), z)
    assert out.int_eps() == (3, 1, -1)


def test_root_round_trip():
    a = Root.make(1, 5, 3)
    assert a.is_positive()
    assert act_root(s(3, 0), Root.simple(0, 3)).negate() == Root.simple(0, 3)


def test_json_round_trip():
    w = translation((1, 0, -1)) * s(3, 2)
    assert AffinePermutation.from_json(w.to_json()) == w
    assert w.to_json() == {"n": 3, "window": list(w.window)}


windows = st.integers(2, 4).flatmap(
    lambda n: st.tuples(
        st.permutations(range(1, n + 1)),
        st.lists(st.integers(-2, 2), min_size=n, max_size=n),
    ).map(lambda t: translation(t[1]) * AffinePermutation(tuple(t[0])))
)


@settings(max_examples=60, deadline=None)
@given(windows)
def test_length_matches_inversions(w):
    assert length(w) == len(inversion_set(w)) == length(w.inverse())


@settings(max_examples=60, deadline=None)
@given(windows)
def test_reduced_word_evaluates_back(w):
    rw = reduced_word(w)
    assert rw.evaluate() == w
    assert len(rw) == length(w)


@settings(max_examples=60, deadline=None)
@given(windows, st.sampled_from([(), (1,), (1, 2), (2,)]))
def test_coset_decomposition_additive(w, I):
    I = [i for i in I if i < w.n]
    w1, u = coset_decompose(w, I)
    assert w1 * u == w
    assert is_min_coset_rep(w1, I)
    assert length(w) == length(w1) + length(u)


@settings(max_examples=40, deadline=None)
@given(windows, st.lists(st.integers(-3, 3), min_size=4, max_size=4), st.integers(-2, 2))
def test_coweight_form_invariant(w, xs, d):
    n = w.n
    h = AffineCoweight(tuple(xs[:n]), Fraction(1, 2), d)
    g = AffineCoweight(tuple(reversed(xs[:n])), 0, 1)
    assert coweight_form(act_coweight(w, h), act_coweight(w, g)) == coweight_form(h, g)


@settings(max_examples=40, deadline=None)
@given(windows, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_weight_form_invariant(w, xs):
    n = w.n
    z = AffineWeight(tuple(xs[:n]), 2, 0)
    y = AffineWeight(tuple(xs[:n][::-1]), 1, 3)
    assert weight_form(act_weight(w, z), act_weight(w, y)) == weight_form(z, y)
