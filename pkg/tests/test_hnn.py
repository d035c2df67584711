import random

import pytest
from hypothesis import given, settings, strategies as st

from knotsplit import (InvariantViolation, LaurentPoly, Presentation, PresentationError, QQ, SplittingData, Word,
                       abelianize, abelianized_image, amalgam_presentation, builtin, degree_bound_check,
                       eliminate_generator, hnn_presentation, induced_splitting, is_primitive_vector, search_homs,
                       shift_levels, trivial_rep, verify_fox_block_structure)
from knotsplit.freegroup import cyclically_equivalent

from conftest import random_free_splitting

W = Word.from_string


def S52():
    return builtin("5_2").splitting


def same_relators(P, Q):
    """Same generators and relators up to order, cyclic permutation and inversion."""
    if P.generators != Q.generators or len(P.relators) != len(Q.relators):
        return False
    rest = list(Q.relators)
    for r in P.relators:
        hit = next((i for i, q in enumerate(rest) if cyclically_equivalent(r, q)), None)
        if hit is None:
            return False
        rest.pop(hit)
    return True


def test_hnn_presentation_52():
    P, eps = hnn_presentation(S52())
    assert P.generators == ("a", "b", "t")
    assert [str(r) for r in P.relators] == ["b^-1 t a t^-1", "a^-1 b a^-1 b t b^-1 a b^-1 t^-1"]
    assert eps.as_dict() == {"a": 0, "b": 0, "t": 1}
    assert same_relators(P, builtin("5_2").presentation)


def test_hnn_presentation_rank3_is_the_four_generator_presentation():
    S = builtin("5_2_rank3").splitting
    P, _ = hnn_presentation(S)
    assert same_relators(P, builtin("5_2_rank3").presentation)
    assert S.monomorphism_verified


def test_empty_splitting_and_collisions():
    S = SplittingData(Presentation(("a", "b"), ()), (), ())
    P, eps = hnn_presentation(S)
    assert P.relators == () and P.generators == ("a", "b", "t")
    with pytest.raises(PresentationError):
        hnn_presentation(SplittingData(Presentation(("a", "t"), ()), (), ()))
    with pytest.raises(PresentationError):
        SplittingData(Presentation(("a", "b"), ()), (W("a"), W("a^2")), (W("a"), W("b")))
    with pytest.raises(PresentationError):
        SplittingData(Presentation(("a", "b"), ()), (W("a"), W("b")), (W("a"), W("a^2")))
    with pytest.raises(PresentationError):
        SplittingData(Presentation(("a", "b"), ()), (W("a"),), ())


def test_nonfree_base_is_flagged():
    base = Presentation.parse("< a, b | a b a^-1 b^-1 >")
    S = SplittingData(base, (W("a"),), (W("b"),))
    assert not S.monomorphism_verified
    P, _ = hnn_presentation(S)
    assert P.num_relators == 2


def test_json_roundtrip():
    S = S52()
    assert SplittingData.from_json(S.to_json()) == S


def test_amalgam_01_matches_hand_presentation():
    A = amalgam_presentation(S52(), 0, 1)
    assert A.generators == ("a@0", "b@0", "a@1", "b@1")
    hand = Presentation.parse("< a@0, b@0, a@1, b@1 | a@1 = b@0, b@1^-1 a@1 b@1^-1 = (b@0^-1 a@0)^2 >")
    assert same_relators(A, hand)
    assert abelianize(A).to_json() == {"free_rank": 2, "torsion": []}
    # eliminating b0 leaves the single relator (a1^-1 a0)^2 b1 a1^-1 b1
    B = eliminate_generator(A, "b@0", 0)
    assert cyclically_equivalent(B.relators[0], W("(a@1^-1 a@0)^2 b@1 a@1^-1 b@1"))


def test_amalgam_02():
    A = amalgam_presentation(S52(), 0, 2)
    assert (A.num_generators, A.num_relators) == (6, 4)
    assert W("b@1^-1 a@2") in A.relators
    assert abelianize(A) == abelianize(Presentation.parse("< e, f, h | e^-2 h^2 f^-3 >"))
    assert not is_primitive_vector(abelianized_image(Presentation(("e", "h"), ()), W("e^-2 h^2")))
    assert not is_primitive_vector(abelianized_image(Presentation(("f",), ()), W("f^3")))


def test_amalgam_00_is_the_base():
    A = amalgam_presentation(S52(), 0, 0)
    assert A.generators == ("a@0", "b@0") and A.relators == ()
    with pytest.raises(ValueError):
        amalgam_presentation(S52(), 2, 1)


def test_shift_levels():
    A = amalgam_presentation(S52(), -1, 1)
    assert shift_levels(A, 1) == amalgam_presentation(S52(), 0, 2)
    with pytest.raises(PresentationError):
        shift_levels(Presentation(("a",), ()), 1)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_induced_splitting(n):
    S = S52()
    I = induced_splitting(S, n)
    assert I.base == amalgam_presentation(S, 0, n + 1)
    assert I.d == 2 * (n + 1)
    assert I.b_gens[0] == W("a@0") and I.phi_images[0] == W("a@1")
    assert not I.monomorphism_verified
    P, eps = hnn_presentation(I)
    assert abelianize(P) == abelianize(hnn_presentation(S)[0])
    r = trivial_rep(P)
    verify_fox_block_structure(I, r)
    rep = degree_bound_check(I, r)
    assert rep.degree == 1


def test_induced_splitting_negative():
    with pytest.raises(ValueError):
        induced_splitting(S52(), -1)


def test_block_structure_52():
    S = S52()
    rep = verify_fox_block_structure(S, trivial_rep(hnn_presentation(S)[0]))
    assert rep.base_rows == () and rep.splitting_rows == (0, 1)
    assert rep.splitting_support <= {0, 1}


def test_block_structure_baumslag_solitar():
    S = builtin("bs_1_2").splitting
    rep = verify_fox_block_structure(S, trivial_rep(hnn_presentation(S)[0]))
    assert rep.splitting_support == {0, 1}
    entry = rep.P.rows[0][0] + rep.Q.rows[0][0] * LaurentPoly.t()
    assert entry == LaurentPoly.from_dense(QQ, [-2, 1])


def test_block_structure_with_base_relators():
    base = Presentation.parse("< a, b | a^3 >")
    S = SplittingData(base, (W("a"),), (W("a^-1"),))
    P, _ = hnn_presentation(S)
    for r in [trivial_rep(P)] + search_homs(P, 2, 2):
        rep = verify_fox_block_structure(S, r)
        assert rep.base_support <= {0}


def test_block_structure_d0():
    S = SplittingData(Presentation(("a",), ()), (), ())
    rep = verify_fox_block_structure(S, trivial_rep(hnn_presentation(S)[0]))
    assert rep.splitting_support == frozenset()


@pytest.mark.parametrize("name,degree,bound,slack", [("5_2", 1, 1, 0), ("5_2_rank3", 1, 2, 1), ("bs_1_2", 0, 0, 0)])
def test_degree_bound_oracles(name, degree, bound, slack):
    S = builtin(name).splitting
    r = degree_bound_check(S, trivial_rep(hnn_presentation(S)[0]))
    assert (r.degree, r.bound, r.slack, r.vacuous) == (degree, bound, slack, False)


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6), st.integers(-1, 2), st.integers(0, 2))
def test_amalgam_counts(seed, n, span):
    S = random_free_splitting(random.Random(seed))
    A = amalgam_presentation(S, n, n + span)
    assert A.num_generators == (span + 1) * S.base.num_generators
    assert A.num_relators == (span + 1) * S.base.num_relators + span * S.d


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_block_structure_and_bound_on_random_splittings(seed):
    S = random_free_splitting(random.Random(seed))
    P, _ = hnn_presentation(S)
    for r in [trivial_rep(P)] + search_homs(P, 2, 2, limit=10):
        verify_fox_block_structure(S, r)
        degree_bound_check(S, r)
