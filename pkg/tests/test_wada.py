from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from knotsplit import (GF, QQ, ColumnError, Epimorphism, LaurentPoly, Presentation, RationalFunction, Representation,
                       Word, ZeroInvariantError, builtin, equal_up_to_unit, genus_lower_bound, introduce_generator,
                       search_homs, splitting_rank_lower_bound, trivial_rep, verify_column_independence,
                       wada_invariant)
from knotsplit.wada import column_invariants, genus_bound_from_degree, rank_bound_from_degree

from conftest import nonempty_words

T = sympy.Symbol("t")
W = Word.from_string


def poly(*c):
    return LaurentPoly.from_dense(QQ, c)


def sympy_alexander_matrix(P, eps):
    """Independent abelian Fox evaluation: each occurrence of g contributes +-t^(eps of a prefix)."""
    ev = eps.as_dict()
    rows = []
    for r in P.relators:
        row = {g: sympy.Integer(0) for g in P.generators}
        s = 0
        for g, e in r.letters:
            if e > 0:
                row[g] += T ** s
                s += ev[g]
            else:
                s -= ev[g]
                row[g] -= T ** s
        rows.append([row[g] for g in P.generators])
    return sympy.Matrix(rows)


def sympy_first_elementary_gcd(M):
    k = M.shape[1]
    dets = []
    for cols in combinations(range(k), k - 1):
        for rows in combinations(range(M.shape[0]), k - 1):
            d = sympy.expand(M.extract(list(rows), list(cols)).det() * T ** 40)
            if d != 0:
                dets.append(d)
    g = sympy.gcd_list(dets)
    g = sympy.Poly(g, T)
    g = sympy.Poly(sympy.expand(g.as_expr() / T ** min(m[0] for m in g.monoms())), T)
    return g


def as_sympy(p):
    return sum(sympy.Rational(c.numerator, c.denominator) * T ** e for e, c in p.terms.items())


# -- hand-computed oracles ---------------------------------------------

def test_52_oracle():
    fx = builtin("5_2")
    res = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation))
    assert res.deleted_column == "t"
    assert res.Q == poly(2, -3, 2)
    assert res.denom == poly(1, -1)
    assert res.degree == 1
    assert res.J_count == 1
    assert genus_lower_bound(fx.presentation, fx.eps, trivial_rep(fx.presentation)) == 1
    assert splitting_rank_lower_bound(fx.presentation, fx.eps, trivial_rep(fx.presentation)) == 2


def test_trefoil_oracle():
    fx = builtin("trefoil")
    res = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation))
    assert equal_up_to_unit(res.delta, RationalFunction(poly(1, -1, 1), poly(1, -1)))
    assert res.degree == 1


def test_baumslag_solitar_oracle():
    fx = builtin("bs_1_2")
    res = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation))
    assert equal_up_to_unit(res.delta, RationalFunction(poly(-2, 1), poly(1, -1)))
    assert res.degree == 0
    assert splitting_rank_lower_bound(fx.presentation, fx.eps, trivial_rep(fx.presentation)) == 1


def test_unknot_oracle():
    fx = builtin("unknot")
    res = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation))
    assert res.Q == 1 and res.degree == -1
    assert genus_lower_bound(fx.presentation, fx.eps, trivial_rep(fx.presentation)) == 0


@pytest.mark.parametrize("name", ["trefoil", "figure8", "5_2", "5_2_rank3"])
def test_matches_independent_alexander_polynomial(name):
    fx = builtin(name)
    M = sympy_alexander_matrix(fx.presentation, fx.eps)
    ref = sympy_first_elementary_gcd(M)
    res = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation))
    # for a knot group Q_i / (1 - t^eps_i) = Delta_K / (1 - t)
    ours = RationalFunction(res.Q, res.denom) * RationalFunction(poly(1, -1))
    assert sympy.simplify(as_sympy(ours.num.unit_normal()) / ref.as_expr()).is_number
    assert ours.den == 1
    assert equal_up_to_unit(ours.num, fx.known_alexander)


def test_sympy_invariant_factor_oracle_for_52():
    from sympy.matrices.normalforms import invariant_factors
    fx = builtin("5_2")
    M = sympy_alexander_matrix(fx.presentation, fx.eps)
    minor = M[:, :2]
    facs = invariant_factors(minor, domain=sympy.QQ[T])
    prod = sympy.expand(sympy.prod([f.as_expr() if hasattr(f, "as_expr") else sympy.sympify(f) for f in facs]))
    assert sympy.Poly(prod, T).monic() == sympy.Poly(2 * T ** 2 - 3 * T + 2, T).monic()


# -- bounds -----------------------------------------------------------

@pytest.mark.parametrize("deg,k,g,r", [(1, 1, 1, 2), (0, 1, 1, 1), (-1, 1, 0, 0), (3, 2, 2, 3), (2, 2, 1, 2), (-2, 2, 0, 0)])
def test_bound_formulas(deg, k, g, r):
    assert genus_bound_from_degree(deg, k) == g
    assert rank_bound_from_degree(deg, k) == r


@given(st.integers(-10, 30), st.integers(1, 4))
def test_bounds_are_tight_inversions(deg, k):
    g = genus_bound_from_degree(deg, k)
    r = rank_bound_from_degree(deg, k)
    assert deg <= k * (2 * g - 1) or g == 0
    assert deg <= k * (r - 1) or r == 0
    if g > 0:
        assert deg > k * (2 * (g - 1) - 1)
    if r > 0:
        assert deg > k * (r - 2)


# -- errors -------------------------------------------------------------

def test_column_with_zero_eps_is_rejected():
    fx = builtin("5_2")
    with pytest.raises(ColumnError):
        wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation), "a")
    with pytest.raises(ColumnError):
        wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation), "zz")


def test_zero_invariant_raises_in_bounds():
    P = Presentation.parse("< a, b | >")
    eps = Epimorphism.from_values(P, {"a": 1, "b": 0})
    res = wada_invariant(P, eps, trivial_rep(P))
    assert res.is_zero and res.degree is None
    with pytest.raises(ZeroInvariantError):
        genus_lower_bound(P, eps, trivial_rep(P))
    with pytest.raises(ZeroInvariantError):
        splitting_rank_lower_bound(P, eps, trivial_rep(P))


# -- well-definedness -------------------------------------------------

def _extend_rep(r, name, w):
    F = r.field
    return Representation(r.dimension, F, {**r.images, name: r.image(w)})


def _rank3_variant(r):
    return _extend_rep(r, "c", W("t b^-2 a b^-2 t^-1"))


@pytest.mark.parametrize("d,p", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_52_tietze_variant_agrees_for_searched_reps(d, p):
    fx, fx3 = builtin("5_2"), builtin("5_2_rank3")
    for r in search_homs(fx.presentation, d, p, limit=40):
        r3 = _rank3_variant(r)
        assert verify_column_independence(fx.presentation, fx.eps, r, [(fx3.presentation, fx3.eps, r3)])


@pytest.mark.parametrize("name", ["trefoil", "figure8", "5_2"])
def test_all_columns_agree_trivial_rep(name):
    fx = builtin(name)
    cols = column_invariants(fx.presentation, fx.eps, trivial_rep(fx.presentation))
    assert len(cols) >= 1
    assert verify_column_independence(fx.presentation, fx.eps, trivial_rep(fx.presentation))


def test_pd_and_fixture_presentations_agree():
    from knotsplit import PDCode, wirtinger_from_pd
    from knotsplit.knotio import PD_CODES
    for name in ("trefoil", "5_2"):
        P, eps = wirtinger_from_pd(PDCode.parse(PD_CODES[name]))
        fx = builtin(name)
        a = wada_invariant(P, eps, trivial_rep(P)).delta
        b = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation)).delta
        assert equal_up_to_unit(a, b)


@settings(max_examples=25)
@given(nonempty_words(("a", "b"), 6), st.integers(0, 11))
def test_random_tietze_moves_preserve_invariant(w, idx):
    fx = builtin("trefoil")
    reps = search_homs(fx.presentation, 2, 3)
    r = reps[idx % len(reps)]
    Q = introduce_generator(fx.presentation, "z", w)
    eq = Epimorphism.from_values(Q, {**fx.eps.as_dict(), "z": fx.eps(w)})
    rq = _extend_rep(r, "z", w)
    assert verify_column_independence(fx.presentation, fx.eps, r, [(Q, eq, rq)])


def test_padding_changes_nothing():
    from knotsplit.presentation import pad_relators
    fx = builtin("figure8")
    r = trivial_rep(fx.presentation)
    a = wada_invariant(fx.presentation, fx.eps, r)
    b = wada_invariant(pad_relators(fx.presentation, 5), fx.eps, r)
    assert equal_up_to_unit(a.delta, b.delta)


def test_json_report():
    fx = builtin("5_2")
    js = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation)).to_json()
    assert js["Q_str"] == "2*t^2 - 3*t + 2"
    assert js["degree"] == 1 and js["deleted_column"] == "t"


def test_finite_field_computation():
    fx = builtin("5_2")
    res = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation, GF(5)))
    # 2t^2 - 3t + 2 reduced mod 5 and made monic: t^2 + t + 1
    assert res.Q == LaurentPoly.from_dense(GF(5), [1, 1, 1])


@pytest.mark.parametrize("name", ["trefoil", "figure8"])
def test_all_columns_agree_for_nonabelian_reps(name):
    fx = builtin(name)
    reps = [r for r in search_homs(fx.presentation, 2, 3, conjugate_generators=True) if not r.is_abelian()]
    assert reps
    for r in reps[:30]:
        assert verify_column_independence(fx.presentation, fx.eps, r)
