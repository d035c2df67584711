"""Wada's invariant of a few small groups, with the genus and rank bounds it gives."""

from knotsplit import builtin, search_homs, trivial_rep, wada_invariant
from knotsplit.wada import genus_bound_from_degree, rank_bound_from_degree

# The trivial representation recovers Alexander polynomials (divided by 1 - t).
for name in ("trefoil", "figure8", "5_2", "bs_1_2"):
    fx = builtin(name)
    res = wada_invariant(fx.presentation, fx.eps, trivial_rep(fx.presentation))
    print(f"{name:8s} Delta = {res.delta.unit_normal()}   deg {res.degree}")

# Nonabelian representations can see more.  Here: every 2-dim rep of the
# 5_2 group over F_3, and the best genus bound among them.
fx = builtin("5_2")
best = 0
for alpha in search_homs(fx.presentation, 2, 3):
    res = wada_invariant(fx.presentation, fx.eps, alpha)
    if not res.is_zero:
        best = max(best, genus_bound_from_degree(res.degree, alpha.dimension))
print("5_2 genus bound over GL(2,3) reps:", best)
print("rank bound from degree 1, k = 1:", rank_bound_from_degree(1, 1))
