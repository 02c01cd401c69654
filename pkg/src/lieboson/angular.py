"""Clebsch-Gordan coefficients and coupling of operator-valued spherical tensors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bosons import OperatorPoly, Species
from .errors import DomainError, TriangleError
from .scalar import ZERO, RadicalScalar, sqrt

__all__ = [
    "clebsch_gordan",
    "SphericalTensorOp",
    "couple",
    "creation_tensor",
    "tilde_tensor",
    "projections",
]


def _hf(x) -> Fraction:
    x = Fraction(x)
    if x.denominator not in (1, 2):
        raise DomainError(f"{x} is not a half-integer")
    return x


def _int(x: Fraction) -> int:
    if x.denominator != 1:
        raise DomainError(f"{x} is not an integer")
    return int(x)


def _check_pair(j: Fraction, m: Fraction):
    if j < 0:
        raise DomainError(f"negative angular momentum {j}")
    if (j - m).denominator != 1:
        raise DomainError(f"m={m} is not integer-spaced from j={j}")
    if abs(m) > j:
        raise DomainError(f"|m|={abs(m)} exceeds j={j}")


def projections(k) -> list[Fraction]:
    """``[-k, -k+1, ..., k]`` as Fractions."""
    k = _hf(k)
    return [-k + i for i in range(int(2 * k) + 1)]


def clebsch_gordan(j1, m1, j2, m2, j, m) -> RadicalScalar:
    """Exact <j1 m1 j2 m2 | j m> in the Condon-Shortley convention."""
    args = tuple(_hf(x) for x in (j1, m1, j2, m2, j, m))
    for jj, mm in zip(args[0::2], args[1::2]):
        _check_pair(jj, mm)
    return _cg(*args)


@lru_cache(maxsize=None)
def _cg(j1, m1, j2, m2, j, m) -> RadicalScalar:
    if m1 + m2 != m:
        return ZERO
    if not (abs(j1 - j2) <= j <= j1 + j2) or (j1 + j2 - j).denominator != 1:
        return ZERO
    f = factorial
    norm = Fraction(
        int(2 * j + 1)
        * f(_int(j + j1 - j2))
        * f(_int(j - j1 + j2))
        * f(_int(j1 + j2 - j)),
        f(_int(j1 + j2 + j + 1)),
    )
    norm *= (
        f(_int(j + m)) * f(_int(j - m))
        * f(_int(j1 - m1)) * f(_int(j1 + m1))
        * f(_int(j2 - m2)) * f(_int(j2 + m2))
    )
    total = Fraction(0)
    kmin = max(0, _int(j2 - j - m1), _int(j1 + m2 - j))
    kmax = min(_int(j1 + j2 - j), _int(j1 - m1), _int(j2 + m2))
    for k in range(kmin, kmax + 1):
        den = (
            f(k) * f(_int(j1 + j2 - j - k)) * f(_int(j1 - m1 - k))
            * f(_int(j2 + m2 - k)) * f(_int(j - j2 + m1 + k))
            * f(_int(j - j1 - m2 + k))
        )
        total += Fraction((-1) ** k, den)
    return sqrt(norm) * total


@dataclass(frozen=True)
class SphericalTensorOp:
    """Rank-k operator multiplet; ``components[i]`` has projection ``-k + i``."""

    rank: Fraction
    components: tuple[OperatorPoly, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "rank", _hf(self.rank))
        object.__setattr__(self, "components", tuple(self.components))
        if len(self.components) != int(2 * self.rank) + 1:
            raise ValueError(
                f"rank {self.rank} needs {int(2 * self.rank) + 1} components, got {len(self.components)}"
            )

    def __getitem__(self, q) -> OperatorPoly:
        q = _hf(q)
        i = q + self.rank
        if i.denominator != 1 or not 0 <= i < len(self.components):
            raise IndexError(f"projection {q} outside rank {self.rank}")
        return self.components[int(i)]

    @property
    def projections(self) -> list[Fraction]:
        return projections(self.rank)

    def scale(self, c) -> SphericalTensorOp:
        return SphericalTensorOp(self.rank, tuple(x * c for x in self.components), self.name)

    def __add__(self, other: SphericalTensorOp) -> SphericalTensorOp:
        if other.rank != self.rank:
            raise ValueError("cannot add tensors of different rank")
        return SphericalTensorOp(
            self.rank, tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __sub__(self, other: SphericalTensorOp) -> SphericalTensorOp:
        return self + other.scale(-1)


def creation_tensor(species: Species) -> SphericalTensorOp:
    return SphericalTensorOp(
        species.rank, tuple(species.create(mu) for mu in species.components), f"{species.name}'"
    )


def tilde_tensor(species: Species) -> SphericalTensorOp:
    return SphericalTensorOp(
        species.rank, tuple(species.tilde(mu) for mu in species.components), f"{species.name}~"
    )


def couple(T: SphericalTensorOp, U: SphericalTensorOp, k) -> SphericalTensorOp:
    """``[T x U]^k_q = sum <kT qT kU qU | k q> T_qT U_qU`` (T to the left)."""
    k = _hf(k)
    if not (abs(T.rank - U.rank) <= k <= T.rank + U.rank) or (T.rank + U.rank - k).denominator != 1:
        raise TriangleError(f"rank {k} not reachable from {T.rank} x {U.rank}")
    comps = []
    for q in projections(k):
        acc = OperatorPoly()
        for q1 in T.projections:
            q2 = q - q1
            if abs(q2) > U.rank:
                continue
            c = _cg(T.rank, q1, U.rank, q2, k, q)
            if c:
                acc = acc + (T[q1] * U[q2]).scale(c)
        comps.append(acc)
    name = f"[{T.name} x {U.name}]^{k}" if T.name and U.name else ""
    return SphericalTensorOp(k, tuple(comps), name)
