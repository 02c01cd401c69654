"""
Tensor content of su(4) under different angular momenta
=======================================================

The adjoint representation splits into multiplets of whichever A1 plays the
role of angular momentum.  Under W some multiplets have half-integer rank even
though every operator is a product of boson operators.
"""

from lieboson import build, decompose_adjoint, tensor_host

algebra, spec = build("u4")
su4 = tensor_host("u4")

for name in ("L", "W", "222"):
    print(f"--- under {name}")
    for m in decompose_adjoint(su4, spec.jsets[name], naming=algebra):
        kind = "spinor" if m.is_spinor else f"rank {m.rank}"
        print(f"  {kind:>8}: ({', '.join(m.labels)})")
