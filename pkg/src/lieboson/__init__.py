"""Exact Lie-algebraic tools for boson-realized u(n) models.

The coefficient field is Q(i) extended by square roots, so every bracket,
rank decision and tensor identity is checked exactly.  Floating point only
appears in the Fock-space cross-checks.
"""

from .scalar import I, ONE, ZERO, RadicalScalar, sqrt
from .bosons import Mode, OperatorPoly, Species, commutator
from .angular import SphericalTensorOp, clebsch_gordan, couple
from .algebra import LieAlgebra, is_subalgebra
from .sl2 import WeightedDynkinDiagram, enumerate_classes, partition_to_wdd, partitions, verify_triple, wdd
from .tensors import JSet, TensorMultiplet, decompose_adjoint, rank_signature, verify_tensor
from .models import MODEL_NAMES, build, chains, semisimple_sheet_chains, tensor_host
from .casimir import AmncLabels, HamiltonianSpec, energy, enumerate_labels, quadratic_casimir, spectrum

__version__ = "0.1.0"

__all__ = [
    "I", "ONE", "ZERO", "RadicalScalar", "sqrt",
    "Mode", "OperatorPoly", "Species", "commutator",
    "SphericalTensorOp", "clebsch_gordan", "couple",
    "LieAlgebra", "is_subalgebra",
    "WeightedDynkinDiagram", "enumerate_classes", "partition_to_wdd", "partitions", "verify_triple", "wdd",
    "JSet", "TensorMultiplet", "decompose_adjoint", "rank_signature", "verify_tensor",
    "MODEL_NAMES", "build", "chains", "semisimple_sheet_chains", "tensor_host",
    "AmncLabels", "HamiltonianSpec", "energy", "enumerate_labels", "quadratic_casimir", "spectrum",
]
