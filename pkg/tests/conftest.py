import os
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from knotsplit import QQ, GF, LaurentPoly, Word

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def letters(alphabet=("a", "b", "c"), max_size=12):
    return st.lists(st.tuples(st.sampled_from(alphabet), st.sampled_from((1, -1))), max_size=max_size)


def words(alphabet=("a", "b", "c"), max_size=12):
    return letters(alphabet, max_size).map(Word)


def nonempty_words(alphabet=("a", "b", "c"), max_size=8):
    return words(alphabet, max_size).filter(bool)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def laurent_polys(draw, field=QQ, max_terms=4, lo=-3, hi=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = draw(st.integers(lo, hi))
        if field.p is None:
            c = draw(small_fractions)
        else:
            c = draw(st.integers(0, field.p - 1))
        terms[e] = c
    return LaurentPoly(field, terms)


def nonzero_laurent(field=QQ, **kw):
    return laurent_polys(field, **kw).filter(lambda p: not p.is_zero())


def random_free_splitting(rnd, max_rank=3, max_d=3, max_len=4):
    """Random SplittingData with a free base and a machine-verified monomorphism.

    Base rank n in 1..max_rank and d in n..max_d (d = 1 when n = 1), so that the
    HNN presentation has deficiency at most one.  With deficiency two or more
    every invariant vanishes and the degree check would be vacuous.
    """
    from knotsplit import Presentation, SplittingData, free_hom_injective, is_basis

    names = ("a", "b", "c")
    while True:
        n = rnd.randint(1, max_rank)
        d = 1 if n == 1 else rnd.randint(n, max_d)
        gens = names[:n]

        def rand_word():
            while True:
                k = rnd.randint(1, max_len)
                w = Word(tuple((rnd.choice(gens), rnd.choice((1, -1))) for _ in range(k)))
                if w:
                    return w

        b = [rand_word() for _ in range(d)]
        im = [rand_word() for _ in range(d)]
        if is_basis(b) and free_hom_injective(b, im):
            return SplittingData(Presentation(gens, ()), tuple(b), tuple(im), "t")
