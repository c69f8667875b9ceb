from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ddaha import linalg as la


def test_rref_and_rank():
    rows, piv = la.rref([[2, 4], [1, 2]])
    assert rows == [[1, 2]] and piv == [0]
    assert la.rank([[1, 0], [0, 1]]) == 2


def test_nullspace_exact():
    ns = la.nullspace([[1, 1, 1]])
    assert len(ns) == 2
    assert all(sum(v) == 0 for v in ns)
    assert all(isinstance(x, Fraction) for v in ns for x in v)


def test_restrict_detects_non_invariant():
    m = [[0, 1], [1, 0]]
    with pytest.raises(ValueError):
        la.restrict(m, [[1, 0]])
    assert la.restrict(m, [[1, 1]]) == [[1]]


def test_quotient():
    m = [[1, 1], [0, 2]]
    q, comp = la.quotient(m, [[1, 0]])
    assert comp == [1] and q == [[2]]


def test_largest_invariant_subspace():
    # shift operator: only the line of e_1 is invariant inside span(e_1, e_2) minus e_3
    shift = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    sub = la.largest_invariant_subspace([shift], [[1, 0, 0], [0, 1, 0]], 3)
    assert la.span(sub, 3) == la.span([[1, 0, 0], [0, 1, 0]], 3)
    sub = la.largest_invariant_subspace([shift], [[0, 1, 0]], 3)
    assert sub == []


def test_cyclic_span_and_algebra_dimension():
    a = [[0, 1], [1, 0]]
    assert len(la.cyclic_span([a], [[1, 0]], 2)) == 2
    assert len(la.cyclic_span([a], [[1, 1]], 2)) == 1
    assert la.algebra_dimension_mod_p([a]) == 2
    assert la.algebra_dimension_mod_p([a, [[1, 0], [0, 0]]]) == 4


small = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_matmul_associates_with_matvec(a, b):
    v = [1, -2, 3]
    assert la.matvec(la.matmul(a, b), v) == la.matvec(a, la.matvec(b, v))


@settings(max_examples=60, deadline=None)
@given(small)
def test_rank_nullity(a):
    assert la.rank(a) + len(la.nullspace(a, 3)) == 3
    for v in la.nullspace(a, 3):
        assert not any(la.matvec(a, v))
