"""Sweep random free splittings and tabulate the slack in deg Delta <= k(d - 1)."""

import random
from collections import Counter

import numpy as np

from knotsplit import (Presentation, SplittingData, Word, degree_bound_check, free_hom_injective,
                       hnn_presentation, is_basis, search_homs)

rnd = random.Random(1)
GENS = ("a", "b")


def rand_word():
    while True:
        w = Word(tuple((rnd.choice(GENS), rnd.choice((1, -1))) for _ in range(rnd.randint(1, 4))))
        if w:
            return w


splittings = []
while len(splittings) < 20:
    b, im = [rand_word(), rand_word()], [rand_word(), rand_word()]
    if is_basis(b) and free_hom_injective(b, im):
        splittings.append(SplittingData(Presentation(GENS, ()), tuple(b), tuple(im)))

slack = Counter()
for S in splittings:
    P, _ = hnn_presentation(S)
    for alpha in search_homs(P, 2, 2):
        rep = degree_bound_check(S, alpha)
        slack["zero" if rep.vacuous else rep.slack] += 1

print("slack counts:", dict(sorted(slack.items(), key=str)))
vals = np.array([k for k, v in slack.items() if k != "zero" for _ in range(v)])
print("mean slack %.2f, never negative: %s" % (vals.mean(), bool((vals >= 0).all())))
