"""From a PD code to a Wirtinger presentation to an Alexander polynomial."""

from knotsplit import PDCode, RationalFunction, LaurentPoly, QQ, trivial_rep, wada_invariant, wirtinger_from_pd
from knotsplit.dsl import format_presentation
from knotsplit.knotio import PD_CODES

for name, code in PD_CODES.items():
    P, eps = wirtinger_from_pd(PDCode.parse(code))
    res = wada_invariant(P, eps, trivial_rep(P))
    alex = (RationalFunction(res.Q, res.denom) * RationalFunction(LaurentPoly.from_dense(QQ, [1, -1]))).num
    print(f"{name}: {format_presentation(P)}")
    print(f"   Alexander polynomial {alex.unit_normal()}")
