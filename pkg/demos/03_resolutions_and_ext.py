"""Minimal projective resolutions, projective dimension and Ext groups.

Covers are minimal (kernels land in the radical), so the projective
dimension is literally the length of the computed resolution.  When a
resolution does not terminate within the bound, the answer is reported
as undecided -- never silently truncated to a number.
"""

from siltlab import (
    cyclic_nakayama_2,
    ext_dim,
    nakayama_a3,
    projective_dimension,
    simple_module,
)
from siltlab.homology import default_resolution_bound, minimal_resolution

algebra = nakayama_a3().build()  # 1 <- 2 <- 3 with the long path killed

s3 = simple_module(algebra, "3")
s1 = simple_module(algebra, "1")

res = minimal_resolution(s3, default_resolution_bound(algebra))
print("resolution of S3:", " <- ".join(
    str(res.term(i).dims) for i in range(res.length + 1)))
print("pd S3 =", projective_dimension(s3))
print("dim Ext^1(S3, S1) =", ext_dim(1, s3, s1))
print("dim Ext^2(S3, S1) =", ext_dim(2, s3, s1),
      " (the length-2 resolution shows up here)")

# on an oriented cycle with radical square zero the simples have
# periodic syzygies: the resolution never terminates
cyclic = cyclic_nakayama_2().build()
t1 = simple_module(cyclic, "1")
print("pd of a simple over the 2-cycle:", projective_dimension(t1),
      " (None = undecided at the bound, possibly infinite)")
print("...but Ext in any fixed degree stays computable:",
      ext_dim(3, t1, t1))
