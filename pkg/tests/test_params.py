import pytest
from hypothesis import given, settings, strategies as st

from ddaha.afw import identity, pi, simple_reflection, translation
from ddaha.params import (
    AffineSymElement, ParamPair, bracket, brackets, domain_membership, dot_act,
    dot_act_embedded, dot_act_pair, generators, in_affdom, in_dom, reduce_pair_to_fundamental,
    reduce_to_affdom, varpi_orbit_canonical,
)

sigma, varpi, t = AffineSymElement.sigma, AffineSymElement.varpi, AffineSymElement.t


def test_pair_basics():
    pp = ParamPair(3, (2, 1), (0, 0))
    assert pp.p == 2 and pp.n == 3 and pp.diff == (2, 1)
    assert pp.in_I() and pp.in_I_star()
    assert not ParamPair(3, (2, 0), (0, 0)).in_I_star()
    assert ParamPair.from_json(pp.to_json()) == pp
    assert str(pp) == "((2,1),(0,0))"


def test_pair_length_mismatch():
    with pytest.raises(ValueError):
        ParamPair(3, (1, 2), (0,))


def test_brackets_sum_to_kappa():
    assert brackets((0, 2), 3) == (4, -1)
    assert sum(brackets((5, -3, 1), 7)) == 7


def test_bracket_index_out_of_range():
    with pytest.raises(IndexError):
        bracket((1, 2), 2, 3)


def test_dot_examples():
    assert dot_act(sigma(2, 1), (0, 2), 3) == (1, 1)
    assert dot_act(sigma(2, 1), (1, 1), 3) == (0, 2)
    assert dot_act(sigma(2, 1), (2, 3), 3) == (2, 3)
    assert dot_act(varpi(2), (2, 1), 3) == (3, 3)
    assert dot_act(varpi(2), (0, 0), 3) == (2, 1)
    assert dot_act(t(2, 1), (0, 0), 3) == (3, 0)


def test_word_acts_right_to_left():
    w = sigma(2, 1) * varpi(2)
    assert dot_act(w, (0, 0), 3) == dot_act(sigma(2, 1), dot_act(varpi(2), (0, 0), 3), 3)


def test_generator_letters_checked():
    with pytest.raises(IndexError):
        sigma(2, 2)
    with pytest.raises(IndexError):
        sigma(1, 0)
    assert len(generators(1)) == 2
    assert len(generators(3, with_translations=True)) == 8
    assert str(sigma(2, 1) * varpi(2, -1) * t(2, -1)) == "σ1 ϖ^-1 t1^-1"


def test_inverse_word():
    w = sigma(3, 0) * varpi(3) * t(3, 2)
    lam = (1, -2, 0)
    assert dot_act(w.inverse(), dot_act(w, lam, 4), 4) == lam


def test_domains():
    assert in_dom((2, 1, 1))
    assert not in_dom((0, 2))
    assert in_affdom((1, 1), 3)
    assert not in_affdom((0, 2), 3)
    flags = domain_membership(ParamPair(3, (2, 1), (0, 0)))
    assert flags.I_plus and flags.I_kappa_plus and flags.I_star_plus


def test_p1_domain_is_everything():
    assert in_affdom((7,), 2)
    assert reduce_to_affdom((7,), 2) == ((7,), AffineSymElement(1))


def test_reduce_examples():
    canon, w = reduce_to_affdom((0, 2), 3)
    assert canon == (1, 1) and str(w) == "σ1"
    canon, w = reduce_to_affdom((1, 1), 3)
    assert canon == (1, 1) and str(w) == ""


def test_reduce_rejects_nonpositive_kappa():
    with pytest.raises(ValueError):
        reduce_to_affdom((1, 0), 0)


def test_varpi_pair_example():
    other = dot_act_pair(varpi(2), ParamPair(3, (2, 1), (0, 0)))
    assert other == ParamPair(3, (3, 3), (2, 1))
    assert varpi_orbit_canonical(other) == varpi_orbit_canonical(ParamPair(3, (2, 1), (0, 0)))


def test_reduce_pair_requires_star():
    with pytest.raises(ValueError):
        reduce_pair_to_fundamental(ParamPair(3, (2, 0), (0, 0)))


def test_embedded_matches_letters():
    lam = (2, -1, 0)
    for letter, perm in ((sigma(3, 1), simple_reflection(3, 1)),
                         (sigma(3, 0), simple_reflection(3, 0)),
                         (varpi(3), pi(3)),
                         (t(3, 2), translation((0, 1, 0)))):
        assert dot_act(letter, lam, 4) == dot_act_embedded(perm, lam, 4)
    assert dot_act_embedded(identity(3), lam, 4) == lam


vec = st.integers(1, 4).flatmap(lambda p: st.lists(st.integers(-6, 6), min_size=p, max_size=p))


@settings(max_examples=80, deadline=None)
@given(vec, st.integers(1, 5))
def test_reduction_lands_in_affdom(lam, kappa):
    canon, w = reduce_to_affdom(lam, kappa)
    assert in_affdom(canon, kappa)
    assert dot_act(w, lam, kappa) == canon


@settings(max_examples=80, deadline=None)
@given(vec, st.integers(1, 5), st.data())
def test_reduction_is_orbit_invariant(lam, kappa, data):
    g = data.draw(st.sampled_from(generators(len(lam), with_translations=True)))
    moved = dot_act(g, lam, kappa)
    # varpi and t change the coordinate sum; only sigma letters stay in the orbit
    if g.letters[0][0] == "s":
        assert reduce_to_affdom(moved, kappa)[0] == reduce_to_affdom(lam, kappa)[0]


@settings(max_examples=80, deadline=None)
@given(vec, st.integers(1, 5))
def test_varpi_rotates_brackets(lam, kappa):
    p = len(lam)
    rot = brackets(dot_act(varpi(p), lam, kappa), kappa)
    base = brackets(lam, kappa)
    assert all(rot[i] == base[(i - 1) % p] for i in range(p))
