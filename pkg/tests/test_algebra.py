import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from mccool.algebra import (
    FULL,
    PLUS,
    CapacityError,
    add,
    check_capacity,
    claimed_basis,
    closed_form_poincare,
    compute_graded_basis,
    element,
    enumerate_degree_monomials,
    ext_mul,
    format_element,
    gen,
    has_cycle,
    multiply,
    normal_form,
    poincare_polynomial,
    presentation,
    product,
    random_element,
    rewrite_oracle_check,
    rewrite_reduce,
    verify_claimed_basis,
)
from mccool.cache import get_basis


@pytest.fixture(scope="module")
def full3():
    return get_basis(3, FULL)


@pytest.fixture(scope="module")
def plus3():
    return get_basis(3, PLUS)


# independent oracle: bitmask exterior algebra + sympy rank


def oracle_dims(n, variant, qmax):
    if variant == FULL:
        gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    else:
        gens = list(itertools.combinations(range(1, n + 1), 2))
    idx = {g: k for k, g in enumerate(gens)}

    def wedge(mask_a, mask_b):
        if mask_a & mask_b:
            return 0, 0
        # sign = parity of pairs (x in a, y in b) with x > y
        s = 0
        for x in range(len(gens)):
            if mask_a >> x & 1:
                s += bin(mask_b & ((1 << x) - 1)).count("1")
        return (-1) ** s, mask_a | mask_b

    def m(*pairs):
        out = 1, 0
        for p in pairs:
            sgn, mask = wedge(out[1], 1 << idx[p])
            out = out[0] * sgn, mask
        return out

    rels = []
    r = range(1, n + 1)
    if variant == FULL:
        for i, j in itertools.combinations(r, 2):
            rels.append([m((i, j), (j, i))])
        for i, j, k in itertools.permutations(r, 3):
            rels.append([m((k, j), (j, i)), tuple(-x if t == 0 else x for t, x in enumerate(m((k, j), (k, i)))),
                         m((i, j), (k, i))])
    else:
        for i, j, k in itertools.combinations(r, 3):
            a = m((i, j), (i, k))
            b = m((i, j), (j, k))
            rels.append([a, (-b[0], b[1])])
    dims = []
    for q in range(qmax + 1):
        cols = [sum(1 << idx[g] for g in c) for c in itertools.combinations(gens, q)]
        pos = {c: k for k, c in enumerate(cols)}
        rows = []
        if q >= 2:
            for c in itertools.combinations(range(len(gens)), q - 2):
                mask = sum(1 << x for x in c)
                for rel in rels:
                    row = [0] * len(cols)
                    for sgn, rm in rel:
                        s2, tot = wedge(mask, rm)
                        if s2:
                            row[pos[tot]] += sgn * s2
                    if any(row):
                        rows.append(row)
        rk = sympy.Matrix(rows).rank() if rows else 0
        dims.append(len(cols) - rk)
    return dims


@pytest.mark.parametrize("n,variant,qmax", [(2, FULL, 2), (3, FULL, 3), (3, PLUS, 3), (4, PLUS, 4)])
def test_dims_match_independent_oracle(n, variant, qmax):
    want = oracle_dims(n, variant, qmax)
    got = get_basis(n, variant)
    assert [got.dim(q) for q in range(qmax + 1)] == want


# presentation


def test_presentation_shapes():
    p = presentation(2, FULL)
    assert p.generators == ((1, 2), (2, 1))
    assert p.relations == (element((1, [(1, 2), (2, 1)])),)
    p = presentation(3, PLUS)
    assert p.generators == ((1, 2), (1, 3), (2, 3))
    assert p.relations == (element((1, [(1, 2), (1, 3)]), (-1, [(1, 2), (2, 3)])),)
    p = presentation(3, FULL)
    assert len(p.generators) == 6
    assert sum(len(r) == 1 for r in p.relations) == 3
    assert sum(len(r) == 3 for r in p.relations) == 6
    for n in (4, 5):
        assert len(presentation(n, FULL).generators) == n * (n - 1)
        assert len(presentation(n, PLUS).generators) == n * (n - 1) // 2


def test_presentation_errors():
    with pytest.raises(ValueError):
        presentation(1)
    with pytest.raises(ValueError):
        presentation(3, "other")


def test_enumerate_monomials():
    assert enumerate_degree_monomials(presentation(2, FULL), 2) == [((1, 2), (2, 1))]
    assert enumerate_degree_monomials(presentation(3, PLUS), 2) == [
        ((1, 2), (1, 3)), ((1, 2), (2, 3)), ((1, 3), (2, 3))]
    assert enumerate_degree_monomials(presentation(3, FULL), 0) == [()]


# element arithmetic


def test_ext_mul_signs():
    a, b = gen(1, 2), gen(2, 1)
    assert ext_mul(a, b) == {((1, 2), (2, 1)): 1}
    assert ext_mul(b, a) == {((1, 2), (2, 1)): -1}
    assert ext_mul(a, a) == {}


def test_element_drops_zero():
    assert element((1, [(1, 2)]), (-1, [(1, 2)])) == {}
    assert add(gen(1, 2), gen(1, 2), -1) == {}


# basis / normal form


def test_dims_small(full3, plus3):
    assert get_basis(2, FULL).dims() == [1, 2]
    assert full3.dims() == [1, 6, 9]
    assert get_basis(4, PLUS).dims() == [1, 6, 11, 6]
    assert get_basis(2, PLUS).dims() == [1, 1]
    assert poincare_polynomial(get_basis(5, PLUS)) == [1, 10, 35, 50, 24]
    assert poincare_polynomial(presentation(3, PLUS)) == [1, 3, 2]


def test_closed_forms():
    assert closed_form_poincare(4, FULL) == [1, 12, 48, 64]
    assert closed_form_poincare(5, PLUS) == [1, 10, 35, 50, 24]


def test_normal_form_examples(full3):
    assert normal_form(element((1, [(1, 2), (2, 1)])), get_basis(2, FULL)) == {}
    lhs = element((1, [(2, 1), (2, 3)]))
    want = element((1, [(2, 1), (1, 3)]), (1, [(3, 1), (2, 3)]))
    assert normal_form(lhs, full3) == want
    for q in range(3):
        for b in full3.basis(q):
            assert normal_form({b: 1}, full3) == {b: 1}


def test_multiply_examples(plus3):
    b2 = get_basis(2, FULL)
    assert multiply(gen(1, 2), gen(2, 1), b2) == {}
    assert multiply(gen(1, 2), gen(1, 3), plus3) == element((1, [(1, 2), (2, 3)]))
    for g in plus3.pres.generators:
        assert multiply(gen(*g), gen(*g), plus3) == {}


def test_beyond_vanishing_degree_is_zero(full3):
    top = product([gen(1, 2), gen(1, 3), gen(2, 3)], full3)
    assert top == {}


def test_cycles_vanish():
    b = get_basis(4, FULL)
    for cyc in ([(1, 2), (2, 1)], [(1, 2), (2, 3), (3, 1)], [(1, 3), (3, 2), (2, 1)]):
        assert has_cycle(cyc)
        assert product([gen(*p) for p in cyc], b) == {}
    assert not has_cycle([(1, 2), (2, 3), (1, 3)])


def random_elements(pres, q):
    return st.integers(0, 2 ** 32).map(lambda s: random_element(pres, random.Random(s), q))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_graded_commutative_and_associative(data):
    variant = data.draw(st.sampled_from([FULL, PLUS]))
    basis = get_basis(4, variant)
    pres = basis.pres
    qa, qb, qc = (data.draw(st.integers(0, 2)) for _ in range(3))
    a = data.draw(random_elements(pres, qa))
    b = data.draw(random_elements(pres, qb))
    c = data.draw(random_elements(pres, qc))
    ab = multiply(a, b, basis)
    ba = multiply(b, a, basis)
    assert ab == {m: (-1) ** (qa * qb) * x for m, x in ba.items()}
    assert multiply(ab, c, basis) == multiply(a, multiply(b, c, basis), basis)
    assert multiply({(): 1}, a, basis) == normal_form(a, basis)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_normal_form_idempotent_and_linear(data):
    basis = get_basis(4, data.draw(st.sampled_from([FULL, PLUS])))
    q = data.draw(st.integers(0, 3))
    a = data.draw(random_elements(basis.pres, q))
    b = data.draw(random_elements(basis.pres, q))
    na = normal_form(a, basis)
    assert normal_form(na, basis) == na
    assert all(basis.is_basis_monomial(m) for m in na)
    s = Fraction(3, 7)
    assert normal_form(add(a, b, s), basis) == add(na, normal_form(b, basis), s)


def test_relations_vanish():
    for n, v in [(3, FULL), (4, FULL), (4, PLUS)]:
        basis = get_basis(n, v)
        assert all(normal_form(r, basis) == {} for r in basis.pres.relations)


# claimed bases


def test_claimed_basis_counts():
    assert len(claimed_basis(presentation(3, FULL), 2)) == 9
    got = claimed_basis(presentation(4, PLUS), 3)
    assert len(got) == 6
    assert all(m[2] == (3, 4) and m[0][0] == 1 and m[1][0] == 2 for m in got)
    for v in (FULL, PLUS):
        assert claimed_basis(presentation(3, v), 0) == [()]
    with pytest.raises(ValueError):
        claimed_basis(presentation(3, FULL), 3)


@pytest.mark.parametrize("n,variant", [(2, FULL), (3, FULL), (4, FULL), (2, PLUS), (3, PLUS), (4, PLUS), (5, PLUS)])
def test_verify_claimed_basis(n, variant):
    rep = verify_claimed_basis(presentation(n, variant), get_basis(n, variant))
    assert rep.passed, rep.to_dict()


def test_dependent_claim_is_rejected():
    # a_{1,2}a_{1,3} and a_{1,2}a_{2,3} are equal in the plus quotient
    basis = get_basis(3, PLUS)
    m1 = ((1, 2), (1, 3))
    m2 = ((1, 2), (2, 3))
    assert normal_form({m1: 1}, basis) == normal_form({m2: 1}, basis)


# rewriting


def test_rewrite_examples():
    p3 = presentation(3, FULL)
    lhs = element((1, [(2, 1), (2, 3)]))
    assert rewrite_reduce(lhs, p3) == element((1, [(2, 1), (1, 3)]), (1, [(3, 1), (2, 3)]))
    assert rewrite_reduce(element((1, [(1, 2), (2, 1)])), p3) == {}
    pp = presentation(3, PLUS)
    assert rewrite_reduce(element((1, [(1, 2), (1, 3)])), pp) == element((1, [(1, 2), (2, 3)]))


@pytest.mark.parametrize("n,variant", [(3, FULL), (3, PLUS), (4, PLUS)])
def test_rewrite_on_every_monomial(n, variant):
    basis = get_basis(n, variant)
    for q in range(n + 1):
        for m in enumerate_degree_monomials(basis.pres, q):
            assert rewrite_reduce({m: 1}, basis.pres) == normal_form({m: 1}, basis)


def test_rewrite_oracle_small():
    assert rewrite_oracle_check(get_basis(3, FULL), samples=200, seed=3).passed


# capacity


def test_capacity():
    check_capacity(5, FULL)
    check_capacity(6, PLUS)
    with pytest.raises(CapacityError):
        check_capacity(6, FULL)
    with pytest.raises(CapacityError):
        get_basis(7, PLUS)
    with pytest.raises(CapacityError):
        compute_graded_basis(presentation(4, FULL), capacity=3)


def test_format_element():
    assert format_element({}) == "0"
    assert format_element({(): 2}) == "2"
    assert format_element({((1, 3), (2, 1)): -1, ((2, 3), (3, 1)): Fraction(-1, 2)}) == "-a13a21 - 1/2 a23a31"
