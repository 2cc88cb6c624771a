import random

import pytest
from hypothesis import given, strategies as st

from stdbasis.graded import (
    Echelon,
    StandardBasis,
    extract_standard_basis,
    first_betti,
    graded_piece,
    is_standard_basis,
)
from stdbasis.groebner import Ideal, UnsupportedInput, ideal_equal
from stdbasis.poly import Ring

from conftest import R3, basis, rand_form, rebase
from oracles import in_piece

A = Ring(("x", "y"))


def test_graded_piece_examples():
    I = Ideal(A, [A("x^2"), A("y^2")])
    assert graded_piece(I, 2).dimension == 2
    p3 = graded_piece(I, 3)
    assert p3.dimension == 4
    assert set(p3.basis) == {A("x^3"), A("x^2*y"), A("x*y^2"), A("y^3")}
    assert graded_piece(basis("unique_top").ideal(), 5).dimension == 3


def test_graded_piece_is_row_reduced_and_homogeneous():
    p = graded_piece(basis("inessential_pair").ideal(), 7)
    lead = [g.leading_term()[0] for g in p.basis]
    assert len(set(lead)) == len(lead)
    for g in p.basis:
        assert g.is_homogeneous() and g.degree() == 7 and g.leading_term()[1] == 1
        for h in p.basis:
            if h is not g:
                assert h.coefficient(g.leading_term()[0]) == 0


def test_graded_piece_rejects_bad_input():
    with pytest.raises(UnsupportedInput):
        graded_piece(Ideal(A, [A("x^2 + y")]), 2)
    with pytest.raises(ValueError):
        graded_piece(Ideal(A, [A("x")]), -1)


def test_extract_examples():
    B = extract_standard_basis([R3("x^2"), R3("x*y"), R3("x^3")])
    assert list(B) == [R3("x^2"), R3("x*y")]
    assert basis("cubics").degrees == (3, 3, 3, 3)
    assert extract_standard_basis(list(basis("five_columns"))).degrees == (10, 10, 11, 12, 12)


def test_extract_prefers_given_order():
    gens = [R3("x*y"), R3("x*y + x^2"), R3("x^2")]
    assert list(extract_standard_basis(gens)) == [R3("x*y"), R3("x*y + x^2")]


def test_extract_rejects_nonhomogeneous():
    with pytest.raises(UnsupportedInput):
        extract_standard_basis([R3("x^2 + y")])
    with pytest.raises(ValueError):
        extract_standard_basis([R3("0")])


def test_first_betti_examples():
    assert first_betti(basis("unique_top").ideal()) == {5: 3, 6: 1}
    assert first_betti(Ideal(R3, [R3("x"), R3("y")])) == {1: 2}
    assert first_betti(basis("five_columns").ideal()) == {10: 2, 11: 1, 12: 2}


def test_standard_basis_validates():
    with pytest.raises(ValueError):
        StandardBasis(R3, [R3("x^2"), R3("x")])
    with pytest.raises(ValueError):
        StandardBasis(R3, [R3("x"), R3("0")])
    B = StandardBasis(R3, [R3("x"), R3("y^2")])
    assert B.initial_degree == 1 and B.betti() == {1: 1, 2: 1}
    assert not is_standard_basis([R3("x"), R3("x*y")])


def test_echelon_span():
    e = Echelon()
    assert e.add(R3("x + y")._terms)
    assert e.add(R3("x - y")._terms)
    assert not e.add(R3("x")._terms)
    assert e.contains(R3("3*y")._terms)
    assert not e.contains(R3("z")._terms)


gens3 = st.lists(st.tuples(st.integers(0, 10**6), st.integers(1, 3)), min_size=1, max_size=5)


def _forms(spec):
    out = []
    for seed, d in spec:
        f = rand_form(R3, d, random.Random(seed), 2, 0.4)
        if not f.is_zero():
            out.append(f)
    return out


@given(gens3, st.integers(0, 10**6))
def test_betti_invariance(spec, seed):
    F = _forms(spec)
    if not F:
        return
    rng = random.Random(seed)
    B1 = extract_standard_basis(F)
    shuffled = F[:]
    rng.shuffle(shuffled)
    B2 = extract_standard_basis(shuffled)
    assert B1.betti() == B2.betti() == first_betti(Ideal(R3, F))
    assert ideal_equal(B1.ideal(), Ideal(R3, F))
    assert extract_standard_basis(rebase(B1, rng).elements).betti() == B1.betti()


@given(gens3)
def test_extract_is_idempotent(spec):
    F = _forms(spec)
    if not F:
        return
    B = extract_standard_basis(F)
    assert list(extract_standard_basis(B.elements)) == list(B)


@given(gens3)
def test_elements_independent_modulo_lower_degrees(spec):
    F = _forms(spec)
    if not F:
        return
    B = extract_standard_basis(F)
    for i, g in enumerate(B):
        lower = [h for j, h in enumerate(B) if j != i and h.degree() <= g.degree()]
        assert not in_piece(lower, g)
