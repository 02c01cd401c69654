"""Spherical-tensor content of a Lie algebra relative to a chosen A1 subalgebra.

Given a J-set ``(J0, J+, J-)`` inside a host algebra, the adjoint action
splits the host into irreducible multiplets.  Highest-weight vectors are the
kernel of ``ad J+`` split by ``ad J0`` eigenvalue; each string is then walked
down with ``ad J-`` using the Racah normalization

    [J-, T^k_q] = sqrt((k+q)(k-q+1)) T^k_{q-1}.

Half-integer highest weights (spinors) appear for some J-sets even though the
host is built from bosons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import LieAlgebra
from .angular import SphericalTensorOp, projections
from .bosons import OperatorPoly, Species, commutator
from .errors import NotDiagonalizable, NotSl2
from .linalg import nullspace, rref
from .scalar import ZERO, sqrt
from .sl2 import Sl2Triple, verify_triple

__all__ = [
    "JSet",
    "TensorMultiplet",
    "decompose_adjoint",
    "rank_signature",
    "verify_tensor",
    "ladder_length",
    "find_w_vectors",
]


@dataclass(frozen=True)
class JSet:
    """Angular-momentum-like triple with ``[J0,J±]=±J±`` and ``[J+,J-]=2J0``."""

    J0: OperatorPoly
    Jp: OperatorPoly
    Jm: OperatorPoly
    name: str = ""

    def __post_init__(self):
        checks = (
            ("[J0,J+]=J+", commutator(self.J0, self.Jp) - self.Jp),
            ("[J0,J-]=-J-", commutator(self.J0, self.Jm) + self.Jm),
            ("[J+,J-]=2J0", commutator(self.Jp, self.Jm) - self.J0 * 2),
        )
        for relation, residual in checks:
            if residual:
                raise NotSl2(relation, residual)

    @classmethod
    def from_triple(cls, t: Sl2Triple, name: str = "") -> JSet:
        return cls(t.h / 2, t.x, t.y, name or t.name)

    @classmethod
    def from_vector(cls, components: Sequence[OperatorPoly], name: str = "") -> JSet:
        """J-set whose spherical vector is ``(T_-1, T_0, T_+1)``.

        Uses ``J+ = -sqrt(2) T_+1``, ``J- = sqrt(2) T_-1``, ``J0 = T_0``.
        """
        tm, t0, tp = components
        return cls(t0, tp * (-sqrt(2)), tm * sqrt(2), name)

    def triple(self) -> Sl2Triple:
        return verify_triple(self.Jp, self.Jm, self.J0 * 2, self.name)

    def vector(self) -> SphericalTensorOp:
        return SphericalTensorOp(1, (self.Jm / sqrt(2), self.J0, self.Jp / (-sqrt(2))), self.name)

    def casimir(self) -> OperatorPoly:
        """``J0^2 + (J+J- + J-J+)/2``."""
        return self.J0 * self.J0 + (self.Jp * self.Jm + self.Jm * self.Jp) / 2


@dataclass(frozen=True)
class TensorMultiplet(SphericalTensorOp):
    """A verified irreducible multiplet; ``labels`` name each component."""

    labels: tuple[str, ...] = field(default=())

    @property
    def is_spinor(self) -> bool:
        return self.rank.denominator == 2


def verify_tensor(T: SphericalTensorOp, J: JSet) -> tuple[bool, dict]:
    """Check both Racah relations on every component.

    Returns ``(ok, residuals)`` where ``residuals`` maps a relation label such
    as ``"[J+,T(-1/2)]"`` to its nonzero residual polynomial.
    """
    k = T.rank
    residuals = {}
    for q in T.projections:
        Tq = T[q]
        r = commutator(J.J0, Tq) - Tq * q
        if r:
            residuals[f"[J0,T({q})]"] = r
        for sign, Jx, tag in ((1, J.Jp, "J+"), (-1, J.Jm, "J-")):
            q2 = q + sign
            lhs = commutator(Jx, Tq)
            if abs(q2) <= k:
                c = sqrt((k - sign * q) * (k + sign * q + 1))
                r = lhs - T[q2] * c
            else:
                r = lhs
            if r:
                residuals[f"[{tag},T({q})]"] = r
    return not residuals, residuals


def ladder_length(T: SphericalTensorOp, J: JSet) -> int:
    """Number of ``ad J+`` steps from ``T_-k`` until the result vanishes."""
    x = T[-T.rank]
    steps = 0
    while x:
        x = commutator(J.Jp, x)
        steps += 1
        if steps > 4 * len(T.components) + 4:
            raise ValueError("ad J+ is not nilpotent on this multiplet")
    return steps


def _half_steps(limit: int):
    q = Fraction(0)
    while q <= limit:
        yield q
        q += Fraction(1, 2)


def decompose_adjoint(
    L: LieAlgebra, J: JSet, naming: LieAlgebra | None = None
) -> list[TensorMultiplet]:
    """Split ``L`` into irreducible multiplets under the adjoint action of ``J``.

    ``naming`` is the algebra whose basis names label the output (defaults to
    ``L``); inside a degenerate isotypic block the highest-weight vectors are
    chosen in reduced echelon form with respect to that basis, which favours
    short combinations of low-index generators.
    """
    naming = naming or L
    d = L.dim
    ad0 = L.ad_matrix(J.J0)
    adp = L.ad_matrix(J.Jp)
    hw_space = nullspace(adp, d)  # coordinate vectors in L
    found: list[tuple[Fraction, OperatorPoly]] = []
    total = 0
    for q in _half_steps(d):
        if total == len(hw_space):
            break
        # solve (ad0 - q) sum_i a_i K_i = 0
        cols = []
        for v in hw_space:
            w = [sum((ad0[r][c] * v[c] for c in range(d) if v[c] and ad0[r][c]), ZERO) - v[r] * q for r in range(d)]
            cols.append(w)
        system = [[cols[i][r] for i in range(len(hw_space))] for r in range(d)]
        sols = nullspace(system, len(hw_space))
        if not sols:
            continue
        vecs = []
        for a in sols:
            v = [sum((a[i] * hw_space[i][r] for i in range(len(hw_space)) if a[i]), ZERO) for r in range(d)]
            vecs.append(L.element(v))
        for x in _echelon(vecs, naming):
            found.append((q, x))
        total += len(sols)
    if total != len(hw_space):
        raise NotDiagonalizable("ad J0 has non-half-integer or defective spectrum on highest weights")

    multiplets = []
    for k, top in found:
        comps = [top]
        x = top
        for q in reversed(projections(k)[1:]):
            x = commutator(J.Jm, x) / sqrt((k + q) * (k - q + 1))
            comps.append(x)
        if commutator(J.Jm, x):
            raise NotDiagonalizable(f"string from weight {k} does not terminate")
        comps.reverse()
        labels = tuple(_label(c, naming, L) for c in comps)
        multiplets.append(TensorMultiplet(k, tuple(comps), "", labels))
    if sum(len(m.components) for m in multiplets) != d:
        raise NotDiagonalizable("multiplets do not exhaust the algebra")
    multiplets.sort(key=lambda m: m.rank)
    return multiplets


def _echelon(elements: list[OperatorPoly], naming: LieAlgebra) -> list[OperatorPoly]:
    coords = [naming.coordinates(x) for x in elements]
    if any(c is None for c in coords):
        return elements
    R, piv = rref(coords, naming.dim)
    return [naming.element(row) for row in R[: len(piv)]]


def _label(x: OperatorPoly, naming: LieAlgebra, L: LieAlgebra) -> str:
    if naming.contains(x):
        return naming.describe(x)
    return L.describe(x)


def rank_signature(L: LieAlgebra, J: JSet) -> list[Fraction]:
    return sorted(m.rank for m in decompose_adjoint(L, J))


def find_w_vectors(p: Species, W: JSet) -> tuple[TensorMultiplet, TensorMultiplet]:
    """Pair-creation and pair-annihilation vectors of an l=1 boson.

    ``V = (sqrt2 p'_-1 p'_-1, 2 p'_-1 p'_1, sqrt2 p'_1 p'_1)`` and ``U`` the same
    with tilde operators, except that the middle component of ``U`` carries a
    minus sign: with ``p~_m = (-1)^(1-m) p_-m`` that sign is what the Racah
    relations require.  Both are checked against ``W``.
    """
    r2 = sqrt(2)
    c = [p.create(mu) for mu in (-1, 0, 1)]
    a = [p.tilde(mu) for mu in (-1, 0, 1)]
    V = TensorMultiplet(1, (c[0] * c[0] * r2, c[0] * c[2] * 2, c[2] * c[2] * r2), "V",
                        ("sqrt(2) p'[-1] p'[-1]", "2 p'[-1] p'[+1]", "sqrt(2) p'[+1] p'[+1]"))
    U = TensorMultiplet(1, (a[0] * a[0] * r2, a[0] * a[2] * -2, a[2] * a[2] * r2), "U",
                        ("sqrt(2) p~[-1] p~[-1]", "-2 p~[-1] p~[+1]", "sqrt(2) p~[+1] p~[+1]"))
    for T in (V, U):
        ok, residuals = verify_tensor(T, W)
        if not ok:
            relation, residual = next(iter(residuals.items()))
            raise NotSl2(f"{T.name} fails {relation}", residual)
    return V, U
