"""HNN splittings of the 5_2 knot group and the amalgams A[n, m] they induce."""

from knotsplit import (Presentation, Word, abelianize, abelianized_image, amalgam_presentation, builtin,
                       degree_bound_check, format_presentation, hnn_presentation, induced_splitting,
                       is_primitive_vector, trivial_rep)

S = builtin("5_2").splitting
P, eps = hnn_presentation(S)
print("HNN presentation:", format_presentation(P))

for n, m in ((0, 1), (0, 2)):
    A = amalgam_presentation(S, n, m)
    print(f"A[{n},{m}]: {A.num_generators} generators, {A.num_relators} relators,",
          "abelianization", abelianize(A).to_json())

# e^-2 h^2 abelianizes to a non-primitive vector, so it is not a basis element.
v = abelianized_image(Presentation(("e", "h"), ()), Word.from_string("e^-2 h^2"))
print("e^-2 h^2 ->", v, "primitive:", is_primitive_vector(v))

# Induced splittings grow in rank while the degree stays put.
for n in range(3):
    I = induced_splitting(S, n)
    Pi, _ = hnn_presentation(I)
    rep = degree_bound_check(I, trivial_rep(Pi))
    print(f"n={n}: d={I.d}, degree {rep.degree} <= {rep.bound}")
