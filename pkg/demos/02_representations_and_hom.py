"""Representations, morphism spaces and short exact sequences.

A module over kQ/I is a vector space per vertex plus a matrix per arrow;
Hom spaces are kernels of an exact linear system, so every dimension
printed below is a theorem, not an estimate.
"""

from siltlab import (
    a2,
    factorize,
    hom_dim,
    hom_space,
    injective_module,
    is_isomorphic,
    projective_module,
    simple_module,
)

algebra = a2().build()  # the quiver 1 <-- 2

s1 = simple_module(algebra, "1")
s2 = simple_module(algebra, "2")
p2 = projective_module(algebra, "2")
i1 = injective_module(algebra, "1")

print("dim Hom(P2, S2) =", hom_dim(p2, s2), " (top of P2)")
print("dim Hom(P2, S1) =", hom_dim(p2, s1), " (S1 is not a quotient)")
print("dim Hom(S1, P2) =", hom_dim(s1, p2), " (S1 is the socle)")
print("P2 and I1 are isomorphic:", is_isomorphic(p2, i1))

# the projection P2 ->> S2 sits in 0 -> S1 -> P2 -> S2 -> 0
(proj,) = hom_space(p2, s2)
parts = factorize(proj)
print("kernel of P2 ->> S2 has dimension vector", parts["kernel"].dims)
print("image dims", parts["image"].dims,
      "| cokernel dims", parts["cokernel"].dims)
