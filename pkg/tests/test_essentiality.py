import random

import pytest
from hypothesis import given, strategies as st

from stdbasis import essentiality as ess
from stdbasis.essentiality import (
    ESSENTIAL,
    INESSENTIAL,
    NOT_SI,
    SI_CERTIFIED,
    SI_LIKELY,
    BudgetExhausted,
    SeededRandom,
    build_e_basis,
    build_e_maximal,
    build_e_minimal,
    check_hypothesis,
    classify,
    classify_all,
    classify_crosscheck,
    dehomogenized_basis_check,
    dehomogenized_is_minimal,
    essentiality_witness,
    greedy_maximal_inessential_set,
    inessential_by_hilbert,
    inessential_by_variable_powers,
    is_e_basis,
    is_inessential_set,
    make_essential,
    maximum_inessential_subsets,
    nature_invariance_check,
    recheck_si,
    recheck_verdict,
    saturation,
    strongly_inessential,
)
from stdbasis.graded import StandardBasis, is_standard_basis
from stdbasis.groebner import UnsupportedInput, ideal_equal, saturate_form

from conftest import FIXTURE_NAMES, R3, SB, basis, rand_form, rebase

R = R3

# (status letters, exponents of inessential elements, per-variable exponents)
EXPECTED = {
    "cubics": ("EEEI", {3: 1}, {3: (1, 1, 1)}),
    "unique_top": ("EEEI", {3: 1}, {3: (1, 1, 1)}),
    "regularity_trap": ("EIEE", {1: 5}, {1: (3, 2, 2)}),
    "five_columns": ("EEIIE", {2: 5, 3: 4}, {2: (3, 2, 2), 3: (1, 3, 2)}),
    "inessential_pair": ("EEEII", {3: 1, 4: 1}, {3: (1, 1, 1), 4: (1, 1, 1)}),
}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_verdicts(name):
    letters, exps, var_exps = EXPECTED[name]
    B = basis(name)
    vs = classify_all(B)
    assert "".join("I" if v.inessential else "E" for v in vs) == letters
    for v in vs:
        if v.inessential:
            assert v.exponent == exps[v.index]
            assert v.variable_exponents == var_exps[v.index]
        assert recheck_verdict(B, v)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_three_routes_agree(name):
    B = basis(name)
    for i in range(len(B)):
        v = classify(B, i)
        assert inessential_by_hilbert(B, i) == v.inessential
        assert inessential_by_variable_powers(B, i) == v.inessential
        assert classify_crosscheck(B, i).status == v.status


def test_inessential_certificate_products():
    B = basis("unique_top")
    g1, g2, g3, f = B
    H = B.without([3])
    # f x, f y, f z land in H through explicit multiples
    assert f * R("x") == g1 * R("y^2") or f * R("x") == -(g1 * R("y^2"))
    assert all(H.contains(f * R(v)) for v in "xyz")


def test_tampered_certificate_fails_recheck():
    B = basis("five_columns")
    v = classify(B, 2)
    bad = ess.Verdict(v.index, INESSENTIAL, exponent=v.exponent - 1, variable_exponents=v.variable_exponents)
    assert not recheck_verdict(B, bad)
    w = classify(B, 0)
    assert not recheck_verdict(B, ess.Verdict(2, ESSENTIAL, witness_variable=w.witness_variable))


def test_hypothesis_rejected():
    with pytest.raises(UnsupportedInput):
        check_hypothesis(SB(R, "x", "y", "z^2"))
    with pytest.raises(UnsupportedInput):
        classify(SB(R, "x^2", "y^2", "z^2"), 0)


def test_single_generator_is_essential():
    B = SB(R, "x*y")
    v = classify(B, 0)
    assert v.essential and recheck_verdict(B, v)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_nature_invariance_under_adding_rest(name):
    B = basis(name)
    rng = random.Random(3)
    for i in range(len(B)):
        d = B[i].degree()
        h = R.zero()
        for j, g in enumerate(B):
            if j != i and g.degree() <= d:
                h = h + rand_form(R, d - g.degree(), rng, 2) * g
        assert nature_invariance_check(B, i, h)
        assert nature_invariance_check(B, i, R.zero())


def test_nature_invariance_rejects_foreign_h():
    B = basis("cubics")
    with pytest.raises(ValueError):
        nature_invariance_check(B, 3, B[3])
    with pytest.raises(ValueError):
        nature_invariance_check(B, 3, R("x"))


def test_adding_a_strongly_inessential_partner_preserves_verdict():
    # both top-degree elements are inessential and of equal degree
    B = basis("inessential_pair")
    for a in (1, -2, 3):
        B2 = B.replace({3: B[3] + B[4].scale(a)})
        assert classify(B2, 4).inessential
        B3 = B.replace({4: B[4] + B[3].scale(a)})
        assert classify(B3, 3).inessential


def test_make_essential_point_trick():
    B = basis("cubics")
    g1, g2, g3, f = B
    B2 = make_essential(B, 3, 16, SeededRandom(0))
    assert list(B2) == [g1 - f, g2 - f, g3 - f, f]
    assert classify(B2, 3).essential
    assert ideal_equal(B2.ideal(), B.ideal()) and is_standard_basis(B2.elements)


def test_make_essential_fails_for_degree_reasons():
    with pytest.raises(BudgetExhausted):
        make_essential(basis("unique_top"), 3, 16, SeededRandom(0))
    with pytest.raises(ValueError):
        make_essential(basis("unique_top"), 0, 16, SeededRandom(0))


def test_strong_inessentiality_verdicts():
    rng = SeededRandom(0)
    v = strongly_inessential(basis("cubics"), 3, 16, rng)
    assert v.status == NOT_SI and recheck_si(basis("cubics"), v)
    v = strongly_inessential(basis("unique_top"), 3, 16, rng)
    assert v.status == SI_CERTIFIED and v.rule == "unique-top-degree"
    for i in (3, 4):
        v = strongly_inessential(basis("inessential_pair"), i, 16, rng)
        assert v.status == SI_CERTIFIED and v.rule == "sat-of-lower-degree"
        assert recheck_si(basis("inessential_pair"), v)
    for i in (2, 3):
        v = strongly_inessential(basis("five_columns"), i, 64, rng)
        assert v.status == SI_LIKELY and v.trials == 64 and v.seed == 0
    with pytest.raises(ValueError):
        strongly_inessential(basis("five_columns"), 0, 4, rng)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_essentiality_witness(name):
    B = basis(name)
    rng = SeededRandom(1)
    saturated = ideal_equal(saturation(B.ideal()), B.ideal())
    for v in classify_all(B):
        if v.inessential:
            with pytest.raises(ValueError):
                essentiality_witness(B, v.index, rng)
            continue
        w = essentiality_witness(B, v.index, rng)
        f = B[v.index]
        assert len(w.L) == R.arity - 1
        assert not saturate_form(w.J, w.N).contains(f)
        if saturated:
            assert w.J_saturated is True


def test_e_maximal_profiles():
    rng = SeededRandom(0)
    p = build_e_maximal(basis("five_columns"), 64, rng)
    assert p.nu_e_per_degree == {10: 2, 11: 0, 12: 1}
    assert p.certainty == "monte-carlo"
    p = build_e_maximal(basis("cubics"), 16, rng)
    assert p.nu_e_per_degree == {3: 4} and p.steps == 1
    p = build_e_maximal(basis("unique_top"), 16, rng)
    assert p.nu_e_per_degree == {5: 3, 6: 0} and p.certainty == "exact"


def test_profile_counts_match_betti():
    p = build_e_maximal(basis("inessential_pair"), 16, SeededRandom(0))
    betti = p.basis.betti()
    ess_counts = p.essential_per_degree()
    for d, n in betti.items():
        ines = sum(1 for v in p.verdicts if v.inessential and p.basis[v.index].degree() == d)
        assert ess_counts[d] + ines == n


def test_e_minimal_keeps_ideal_and_does_not_shrink_inessential_sets():
    for name in ("cubics", "five_columns"):
        B = basis(name)
        p = build_e_minimal(B, 32, SeededRandom(0))
        assert ideal_equal(p.basis.ideal(), B.ideal())
        assert is_standard_basis(p.basis.elements)
        before = maximum_inessential_subsets(B)[0].cardinality
        after = maximum_inessential_subsets(p.basis)[0].cardinality
        assert after >= before
        for v in p.verdicts:
            assert recheck_verdict(p.basis, v)


def test_inessential_sets():
    B = basis("inessential_pair")
    assert is_inessential_set(B, [3, 4])
    assert is_inessential_set(B, [])
    assert not is_inessential_set(B, [0])
    g = greedy_maximal_inessential_set(B)
    assert g.indices == (3, 4) and g.maximal and g.cardinality == 2
    assert greedy_maximal_inessential_set(basis("five_columns")).indices == (2, 3)
    assert [s.indices for s in maximum_inessential_subsets(basis("cubics"))] == [(3,)]


def test_is_e_basis_and_build():
    for name in FIXTURE_NAMES:
        assert is_e_basis(basis(name))
        assert build_e_basis(basis(name), 8, SeededRandom(0)) == basis(name)


@pytest.mark.parametrize("name", ["cubics", "five_columns"])
def test_build_e_basis_from_e_minimal(name):
    p = build_e_minimal(basis(name), 32, SeededRandom(0))
    assert all(v.inessential for v in p.verdicts)
    assert not is_e_basis(p.basis)
    E = build_e_basis(p.basis, 64, SeededRandom(5))
    assert is_e_basis(E)
    assert ideal_equal(E.ideal(), p.basis.ideal())
    assert any(v.essential for v in classify_all(E))


def test_build_e_basis_keeps_essential_elements():
    B = basis("five_columns")
    E = build_e_basis(B.replace({3: B[3] + B[2] * R("x")}), 32, SeededRandom(2))
    for v in classify_all(B):
        if v.essential:
            assert E[v.index] == B[v.index]
    assert is_e_basis(E)


def test_dehomogenization_examples():
    B = basis("cubics")
    z = R("z")
    assert dehomogenized_basis_check(B, [3], z)
    assert dehomogenized_basis_check(B, [], z)
    with pytest.raises(ValueError):
        dehomogenized_basis_check(B, [3], R.zero())
    B13 = basis("inessential_pair")
    rng = random.Random(11)
    for _ in range(5):
        L = rand_form(R, 1, rng)
        if L.is_zero():
            continue
        assert dehomogenized_basis_check(B13, [3, 4], L)


def test_dehomogenized_essential_element_of_counterexample():
    B = basis("regularity_trap")
    # the dehomogenized y^7 is redundant although y^7 is essential
    assert dehomogenized_basis_check(B, [2], R("z"))
    assert classify(B, 2).essential
    assert not dehomogenized_is_minimal(B, [], R("z"))


# ---------------------------------------------------------------------------
# randomized corpora

@pytest.mark.parametrize("name", ["cubics", "regularity_trap", "inessential_pair"])
def test_rebased_fixture_minimal_degree_elements_can_be_made_essential(name):
    B = rebase(basis(name), random.Random(7))
    alpha = B.initial_degree
    for v in classify_all(B):
        if v.inessential and B[v.index].degree() == alpha:
            assert classify(make_essential(B, v.index, 32, SeededRandom(1)), v.index).essential


def _moved(name: str, seed: int) -> StandardBasis:
    """Fixture basis after a random linear change of coordinates."""
    from conftest import rand_invertible
    from stdbasis.poly import linear_change

    rng = random.Random(seed)
    m = rand_invertible(3, rng, 1)
    B = basis(name)
    return StandardBasis(R, [linear_change(g, m) for g in B])


@given(st.sampled_from(["cubics", "unique_top", "inessential_pair"]), st.integers(0, 10**6))
def test_verdicts_invariant_under_coordinate_change(name, seed):
    B = basis(name)
    B2 = _moved(name, seed)
    assert [v.status for v in classify_all(B)] == [v.status for v in classify_all(B2)]


@given(st.sampled_from(["cubics", "inessential_pair"]), st.integers(0, 10**6))
def test_rebased_bases_generate_same_ideal(name, seed):
    B2 = rebase(basis(name), random.Random(seed))
    assert is_standard_basis(B2.elements)
    assert ideal_equal(B2.ideal(), basis(name).ideal())
