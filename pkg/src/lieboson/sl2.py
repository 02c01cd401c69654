"""sl2-triples and their weighted Dynkin diagrams in type A.

The diagram of a triple ``(x, y, h)`` is read off the spectrum of ``h`` on the
one-boson (defining) space: sort the eigenvalues descending and take
consecutive differences.  The spectrum is found exactly from the
characteristic polynomial, never numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .bosons import Mode, OperatorPoly, commutator
from .errors import NonIntegerSpectrum, NotBilinear, NotSl2
from .scalar import ONE, ZERO, RadicalScalar, sqrt

__all__ = [
    "Sl2Triple",
    "WeightedDynkinDiagram",
    "verify_triple",
    "defining_matrix",
    "characteristic_polynomial",
    "integer_roots",
    "wdd",
    "partitions",
    "partition_to_wdd",
    "enumerate_classes",
    "class_representatives",
    "jordan_triple",
    "exp_ad",
]


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(a) for a in self.labels))
        if any(a not in (0, 1, 2) for a in self.labels):
            raise ValueError(f"WDD labels must lie in {{0,1,2}}: {self.labels}")

    def __str__(self):
        return "[" + " ".join(map(str, self.labels)) + "]"

    @property
    def compact(self) -> str:
        return "[" + "".join(map(str, self.labels)) + "]"

    def to_json(self) -> list[int]:
        return list(self.labels)


@dataclass(frozen=True)
class Sl2Triple:
    x: OperatorPoly
    y: OperatorPoly
    h: OperatorPoly
    name: str = ""


def verify_triple(x: OperatorPoly, y: OperatorPoly, h: OperatorPoly, name: str = "") -> Sl2Triple:
    """Check ``[h,x]=2x``, ``[h,y]=-2y``, ``[x,y]=h`` exactly."""
    checks = (
        ("[h,x]=2x", commutator(h, x) - x * 2),
        ("[h,y]=-2y", commutator(h, y) + y * 2),
        ("[x,y]=h", commutator(x, y) - h),
    )
    for relation, residual in checks:
        if residual:
            raise NotSl2(relation, residual)
    return Sl2Triple(x, y, h, name)


def defining_matrix(e: OperatorPoly, modes: Sequence[Mode]) -> list[list[RadicalScalar]]:
    """Matrix of a bilinear ``sum M_ij a'_i a_j`` on the one-boson states."""
    index = {m: i for i, m in enumerate(modes)}
    n = len(modes)
    M = [[ZERO] * n for _ in range(n)]
    for (cre, ann), c in e.items():
        if len(cre) != 1 or len(ann) != 1:
            raise NotBilinear(f"monomial with {len(cre)} creators, {len(ann)} annihilators")
        try:
            i, j = index[cre[0]], index[ann[0]]
        except KeyError as exc:
            raise NotBilinear(f"mode {exc.args[0]} not in the defining space") from None
        M[i][j] = M[i][j] + c
    return M


def characteristic_polynomial(M: Sequence[Sequence[RadicalScalar]]) -> list[RadicalScalar]:
    """Coefficients ``[c_0, ..., c_n]`` of ``det(t I - M)`` (Faddeev-LeVerrier)."""
    n = len(M)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = [[ZERO] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk <- M @ Mk + c_{n-k+1} I
        prod = [
            [sum((M[i][l] * Mk[l][j] for l in range(n) if M[i][l] and Mk[l][j]), ZERO) for j in range(n)]
            for i in range(n)
        ]
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            prod[i][i] = prod[i][i] + c_prev
        Mk = prod
        tr = sum(
            (M[i][l] * Mk[l][i] for i in range(n) for l in range(n) if M[i][l] and Mk[l][i]),
            ZERO,
        )
        coeffs[n - k] = -tr / k
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def integer_roots(coeffs: Sequence[RadicalScalar]) -> list[int]:
    """All roots with multiplicity, provided they are all integers."""
    try:
        poly = [c.as_fraction() for c in coeffs]
    except ValueError:
        raise NonIntegerSpectrum("characteristic polynomial has irrational coefficients") from None
    if any(c.denominator != 1 for c in poly):
        raise NonIntegerSpectrum("characteristic polynomial is not integral")
    poly = [int(c) for c in poly]
    roots: list[int] = []
    while len(poly) > 1:
        if poly[0] == 0:
            roots.append(0)
            poly = poly[1:]
            continue
        for d in _divisors(poly[0]):
            hit = None
            for r in (d, -d):
                if sum(c * r**i for i, c in enumerate(poly)) == 0:
                    hit = r
                    break
            if hit is not None:
                break
        else:
            raise NonIntegerSpectrum(f"no integer root of polynomial with coefficients {poly}")
        roots.append(hit)
        # synthetic division by (t - hit), coefficients low -> high
        n = len(poly) - 1
        q = [0] * n
        q[n - 1] = poly[n]
        for i in range(n - 1, 0, -1):
            q[i - 1] = poly[i] + hit * q[i]
        poly = q
    return roots


def wdd(triple: Sl2Triple, modes: Sequence[Mode]) -> WeightedDynkinDiagram:
    """Weighted Dynkin diagram of a triple from the spectrum of ``h``."""
    M = defining_matrix(triple.h, modes)
    eig = sorted(integer_roots(characteristic_polynomial(M)), reverse=True)
    labels = [a - b for a, b in zip(eig, eig[1:])]
    if any(a not in (0, 1, 2) for a in labels):
        raise NonIntegerSpectrum(f"h spectrum {eig} does not come from a normalized triple")
    return WeightedDynkinDiagram(tuple(labels))


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_to_wdd(lam: Sequence[int]) -> WeightedDynkinDiagram:
    """Diagram of the class whose nilpotent has Jordan type ``lam``.

    Each block of size b contributes the h-eigenvalues b-1, b-3, ..., 1-b.
    """
    spectrum = [b - 1 - 2 * i for b in lam for i in range(b)]
    spectrum.sort(reverse=True)
    return WeightedDynkinDiagram(tuple(a - b for a, b in zip(spectrum, spectrum[1:])))


def _orbit_dim(lam: Sequence[int]) -> int:
    n = sum(lam)
    dual = [sum(1 for b in lam if b > i) for i in range(max(lam))]
    return n * n - sum(d * d for d in dual)


def jordan_triple(lam: Sequence[int], modes: Sequence[Mode]) -> Sl2Triple:
    """Triple acting as spin (b-1)/2 on consecutive blocks of ``modes``."""
    if sum(lam) != len(modes):
        raise ValueError("partition size must match the number of modes")
    x = y = h = OperatorPoly()
    start = 0
    for b in lam:
        block = modes[start : start + b]  # block[i] has weight j - i
        j = Fraction(b - 1, 2)
        for i, mode in enumerate(block):
            m = j - i
            h = h + OperatorPoly({((mode,), (mode,)): 2 * m})
            if i > 0:
                c = sqrt((j - m) * (j + m + 1))
                up, down = block[i - 1], mode
                x = x + OperatorPoly({((up,), (down,)): c})
                y = y + OperatorPoly({((down,), (up,)): c})
        start += b
    return verify_triple(x, y, h, name="J" + "".join(map(str, lam)))


def _generic_modes(n: int) -> list[Mode]:
    return [Mode(f"a{i + 1}", 0, 0) for i in range(n)]


def class_representatives(n: int) -> list[tuple[tuple[int, ...], Sl2Triple, WeightedDynkinDiagram]]:
    """One explicit triple per nonzero nilpotent class of sl(n).

    Ordered by nilpotent orbit dimension, ties by partition.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    modes = _generic_modes(n)
    lams = [lam for lam in partitions(n) if lam[0] > 1]
    lams.sort(key=lambda lam: (_orbit_dim(lam), lam))
    out = []
    for lam in lams:
        t = jordan_triple(lam, modes)
        out.append((lam, t, wdd(t, modes)))
    return out


def enumerate_classes(n: int) -> list[WeightedDynkinDiagram]:
    """Diagrams of all sl2 classes of sl(n), computed from explicit triples."""
    seen = []
    for _, _, d in class_representatives(n):
        if d not in seen:
            seen.append(d)
    return seen


def exp_ad(z: OperatorPoly, x: OperatorPoly, max_order: int = 32) -> OperatorPoly:
    """``exp(ad z) x`` for ad-nilpotent ``z``."""
    total, term = x, x
    k = 0
    while True:
        k += 1
        term = commutator(z, term) / k
        if not term:
            return total
        if k > max_order:
            raise ValueError("ad z is not nilpotent on x within max_order steps")
        total = total + term
