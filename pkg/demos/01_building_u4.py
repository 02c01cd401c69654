"""
Building u(4) from boson bilinears
==================================

Sixteen coupled bilinears of one s and three p bosons close under the
commutator.  The radical is the total boson number and the rest is su(4).
"""

from lieboson import build

algebra, spec = build("u4")
print(algebra)

# a few generators written out in creation/annihilation form
for name in ("g1", "g3", "g11", "g16"):
    print(f"{name:>4} = {spec.generators[name].to_text()}")

# structure constants are exact; the Jacobi identity has no residual at all
print("Jacobi residuals:", len(algebra.jacobi_residuals()))

levi = algebra.levi_decomposition()
info = levi.describe()
print("radical:", info["radical"])
print("Levi part dimension:", info["dim_levi"])
