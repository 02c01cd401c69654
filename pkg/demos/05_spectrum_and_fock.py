"""
Energies from Casimirs, checked on Fock space
=============================================

The closed-form energy of the so(6) > so(5) > so(4) > so(3) chain is exact
rational arithmetic over the branching labels.  The quadratic Casimirs
themselves can be diagonalized numerically on a fixed-N sector.
"""

from fractions import Fraction

from lieboson import HamiltonianSpec, spectrum
from lieboson.casimir import label_count_report, model_operator
from lieboson.fock import assign_half_integer, diagonalize, fock_matrix
from lieboson.models import build

h = HamiltonianSpec(alpha=Fraction(1, 10), beta=-1, gamma=Fraction(1, 2), delta=1)
for labels, e in spectrum(h, 2):
    print(tuple(labels), e)
print(label_count_report(2))

_, spec = build("u4")
for op in ("L2", "W2"):
    values = diagonalize(fock_matrix(model_operator("u4", op), spec.modes, 2))
    print(op, [assign_half_integer(v) for v in values])
