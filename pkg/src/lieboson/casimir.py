"""Quadratic Casimirs, the so(6) > so(5) > so(4) > so(3) energy formula and its labels."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, NamedTuple

from .algebra import LieAlgebra
from .bosons import OperatorPoly, commutator
from .errors import DegenerateForm, LieBosonError
from .linalg import inverse_matrix
from .models import build
from .scalar import sqrt
from .tensors import JSet

__all__ = [
    "quadratic_casimir",
    "killing_to_jset_ratio",
    "model_operator",
    "CasimirFormula",
    "CASIMIR_FORMULAS",
    "AmncLabels",
    "HamiltonianSpec",
    "energy",
    "enumerate_labels",
    "spectrum",
    "label_count_report",
]


def quadratic_casimir(sub: JSet | LieAlgebra, normalization: str = "jset") -> OperatorPoly:
    """Quadratic Casimir of an A1 J-set or of a semisimple subalgebra.

    ``"jset"`` gives ``J0^2 + (J+J- + J-J+)/2`` so eigenvalues read j(j+1).
    ``"killing"`` gives ``sum kappa^ij x_i x_j`` with the inverse of the
    subalgebra's own Killing form.  Either way the result is checked to
    commute with every element of ``sub``.
    """
    if normalization == "jset":
        if not isinstance(sub, JSet):
            raise TypeError("jset normalization needs a JSet")
        C = sub.casimir()
        elements = (sub.J0, sub.Jp, sub.Jm)
    elif normalization == "killing":
        L = _as_algebra(sub)
        if L.dim == 0:
            raise DegenerateForm("empty subalgebra")
        try:
            kinv = inverse_matrix(L.killing_matrix())
        except ZeroDivisionError:
            raise DegenerateForm(f"Killing form of {L.label or 'subalgebra'} is singular") from None
        C = OperatorPoly()
        for i, xi in enumerate(L.basis):
            for j, xj in enumerate(L.basis):
                if kinv[i][j]:
                    C = C + (xi * xj) * kinv[i][j]
        elements = L.basis
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    for x in elements:
        if commutator(C, x):
            raise LieBosonError("Casimir does not commute with its subalgebra")
    return C


def _as_algebra(sub) -> LieAlgebra:
    if isinstance(sub, LieAlgebra):
        return sub
    if isinstance(sub, JSet):
        return LieAlgebra.from_generators([("J0", sub.J0), ("J+", sub.Jp), ("J-", sub.Jm)], label=sub.name)
    raise TypeError(type(sub).__name__)


def killing_to_jset_ratio(J: JSet) -> Fraction:
    """The rational r with ``C_killing = r * C_jset`` for an A1."""
    ck = quadratic_casimir(J, "killing")
    cj = quadratic_casimir(J, "jset")
    key, c = next(iter(cj.items()))
    r = ck.coefficient(*key) / c
    if ck - cj * r:
        raise LieBosonError("Casimirs are not proportional")
    return r.as_fraction()


def model_operator(model: str, name: str) -> OperatorPoly:
    """Named operators for Fock checks: ``N``, ``L2``, ``W2`` (and ``J2`` in u2)."""
    algebra, spec = build(model)
    if name == "N":
        if model == "u2":
            return spec.g(1) + spec.g(4)
        if model == "u2u2":
            return spec.g(1) + spec.g(4) + spec.g(5) + spec.g(8)
        if model == "u3":
            return spec.g(1) * sqrt(3)
        return spec.g(1) * sqrt(3) + spec.g(16)
    key = {"L2": "L", "W2": "W", "J2": "J"}.get(name)
    if key is None or key not in spec.jsets:
        raise KeyError(f"operator {name!r} is not defined for {model}")
    return quadratic_casimir(spec.jsets[key])


@dataclass(frozen=True)
class CasimirFormula:
    algebra: str
    label: str
    value: Callable[[int], int]


CASIMIR_FORMULAS = {
    "so6": CasimirFormula("so6", "N", lambda n: n * (n + 4)),
    "so5": CasimirFormula("so5", "t", lambda t: t * (t + 3)),
    "so4": CasimirFormula("so4", "u", lambda u: u * (u + 2)),
    "so3": CasimirFormula("so3", "w", lambda w: w * (w + 1)),
}


class AmncLabels(NamedTuple):
    N: int
    t: int
    u: int
    w: int

    def validate(self) -> "AmncLabels":
        if not 0 <= self.w <= self.u <= self.t <= self.N:
            raise ValueError(f"labels must satisfy 0 <= w <= u <= t <= N: {tuple(self)}")
        return self


@dataclass(frozen=True)
class HamiltonianSpec:
    """``H = alpha C2(so6) + beta C2(so5) + gamma C2(so4) + delta C2(so3)``."""

    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    gamma: Fraction = Fraction(0)
    delta: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other: HamiltonianSpec) -> HamiltonianSpec:
        return HamiltonianSpec(
            self.alpha + other.alpha, self.beta + other.beta, self.gamma + other.gamma, self.delta + other.delta
        )


def energy(h: HamiltonianSpec, labels: AmncLabels) -> Fraction:
    N, t, u, w = labels.validate()
    f = CASIMIR_FORMULAS
    return (
        h.alpha * f["so6"].value(N)
        + h.beta * f["so5"].value(t)
        + h.gamma * f["so4"].value(u)
        + h.delta * f["so3"].value(w)
    )


def enumerate_labels(N: int) -> list[AmncLabels]:
    """``t = 0..N, u = 0..t, w = 0..u`` in lexicographic order."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return [AmncLabels(N, t, u, w) for t in range(N + 1) for u in range(t + 1) for w in range(u + 1)]


def spectrum(h: HamiltonianSpec, N: int) -> list[tuple[AmncLabels, Fraction]]:
    return [(lab, energy(h, lab)) for lab in enumerate_labels(N)]


def label_count_report(N: int) -> dict:
    """Label count next to the two natural state counts it could be compared with.

    ``weighted`` counts each label 2w+1 times; ``fock`` is the dimension of
    the N-boson space of four modes.
    """
    labels = enumerate_labels(N)
    return {
        "N": N,
        "labels": len(labels),
        "closed_form": (N + 1) * (N + 2) * (N + 3) // 6,
        "weighted": sum(2 * lab.w + 1 for lab in labels),
        "fock": comb(N + 3, 3),
    }
