"""Folding subgroup graphs: ranks, indices and injectivity certificates in F(a, b)."""

from knotsplit import Word, contains, free_hom_injective, index, stallings_fold

W = Word.from_string

B = [W("a"), W("b^-1 a b^-1"), W("b^-2 a b^-2")]
g = stallings_fold(B)
print("rank of <a, b^-1 a b^-1, b^-2 a b^-2> =", g.rank())

# A finite-index subgroup: rank and index satisfy Nielsen-Schreier.
cover = stallings_fold(B + [W("b^-1 a^2 b"), W("b^4")])
r, i = cover.rank(), index(cover, ["a", "b"])
print(f"cover: rank {r}, index {i}, i*(2-1)+1 = {i + 1}")

# Membership with a rewrite in the folded basis.
ok, expr = contains(g, W("b^-1 a b^-1 a^-1"), rewrite=True)
print("b^-1 a b^-1 a^-1 in subgroup:", ok, expr)

# The splitting map a -> b, b^-1 a b^-1 -> (b^-1 a)^2 is a monomorphism.
print("phi injective:", free_hom_injective([W("a"), W("b^-1 a b^-1")], [W("b"), W("(b^-1 a)^2")]))
