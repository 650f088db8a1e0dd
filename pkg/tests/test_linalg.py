from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from mccool.linalg import Echelon, fmt_scalar, intersect, nullspace, parse_scalar, rank, row_space_basis


def dense(vecs, ncols):
    return sympy.Matrix([[v.get(c, 0) for c in range(ncols)] for v in vecs]) if vecs else sympy.zeros(0, ncols)


def sparse_rows(ncols):
    entry = st.integers(-3, 3)
    row = st.dictionaries(st.integers(0, ncols - 1), entry, max_size=ncols).map(
        lambda d: {k: v for k, v in d.items() if v})
    return st.lists(row, max_size=7)


@settings(max_examples=150, deadline=None)
@given(sparse_rows(6))
def test_rank_matches_sympy(vecs):
    assert rank(vecs) == dense(vecs, 6).rank()


@settings(max_examples=100, deadline=None)
@given(sparse_rows(5))
def test_rref_is_reduced_and_spans(vecs):
    rows = row_space_basis(vecs)
    pivots = [min(r) for r in rows]
    for r, p in zip(rows, pivots):
        assert r[p] == 1
        for other in rows:
            if other is not r:
                assert p not in other
    assert dense(rows, 5).rank() == dense(vecs + rows, 5).rank() == len(rows)


@settings(max_examples=100, deadline=None)
@given(sparse_rows(5))
def test_nullspace_is_orthogonal_complement(vecs):
    ns = nullspace(vecs, 5)
    assert len(ns) + rank(vecs) == 5
    for x in ns:
        for v in vecs:
            assert sum(a * x.get(c, 0) for c, a in v.items()) == 0


def test_intersection_of_coordinate_planes():
    u = [{0: 1}, {1: 1}]  # xy-plane
    ann = [{0: 1}]  # x = 0
    out = intersect(u, ann)
    assert len(out) == 1 and set(out[0]) == {1}


@settings(max_examples=80, deadline=None)
@given(sparse_rows(5), sparse_rows(5))
def test_intersection_dimension_formula(a, b):
    u = row_space_basis(a)
    w = row_space_basis(b)
    ann = nullspace(w, 5)
    got = intersect(u, ann)
    # dim(U ∩ W) = dim U + dim W - dim(U + W)
    assert len(got) == len(u) + len(w) - rank(u + w)
    e = Echelon()
    e.extend(w)
    assert all(e.contains(x) for x in got)


def test_fraction_pivots_stay_exact():
    e = Echelon()
    e.add({0: 3, 1: 1})
    e.add({0: 1, 1: 2})
    e.to_rref()
    assert e.rows == {0: {0: 1}, 1: {1: 1}}
    assert e.reduce({0: Fraction(1, 3), 1: 5}) == {}


def test_scalar_roundtrip():
    for x in (0, 5, -7, Fraction(-3, 4)):
        assert parse_scalar(fmt_scalar(x)) == x
    assert fmt_scalar(Fraction(6, 3)) == "2"
    assert fmt_scalar(Fraction(-1, 2)) == "-1/2"
