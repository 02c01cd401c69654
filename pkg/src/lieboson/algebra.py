"""Finite-dimensional Lie algebras spanned by boson operator polynomials."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .bosons import OperatorPoly, commutator, linear_combination
from .errors import LinearlyDependent, NotClosed, NotReductive
from .linalg import SpanSolver, nullspace, rank, rref
from .scalar import ONE, ZERO, RadicalScalar, format_coefficient

__all__ = [
    "LieAlgebra",
    "LeviDecomposition",
    "is_subalgebra",
    "format_combination",
    "format_coefficient",
]


def format_combination(coords: Sequence[RadicalScalar], names: Sequence[str]) -> str:
    parts = []
    for c, name in zip(coords, names):
        if not c:
            continue
        text = format_coefficient(c)
        if "/" in text and "(" not in text:
            text = ("-" if text[0] == "-" else "") + f"({text.lstrip('-')})"
        if text == "1":
            parts.append(("+", name))
        elif text == "-1":
            parts.append(("-", name))
        elif text.startswith("-"):
            parts.append(("-", f"{text[1:]}*{name}"))
        else:
            parts.append(("+", f"{text}*{name}"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class LieAlgebra:
    """A Lie algebra presented by a named basis of operator polynomials.

    Construct with :meth:`from_generators`; the constructor verifies closure
    and stores the structure constants ``c[i][j][k]`` of
    ``[x_i, x_j] = sum_k c[i][j][k] x_k``.
    """

    def __init__(self, names, basis, structure, solver, label=""):
        self.names: list[str] = list(names)
        self.basis: list[OperatorPoly] = list(basis)
        self._c: list[list[dict]] = structure
        self._solver = solver
        self.label = label
        self._killing = None

    # -- construction -----------------------------------------------------
    @classmethod
    def from_generators(
        cls,
        elements: Mapping[str, OperatorPoly] | Iterable[tuple[str, OperatorPoly]],
        label: str = "",
    ) -> LieAlgebra:
        items = list(elements.items()) if isinstance(elements, Mapping) else list(elements)
        names = [n for n, _ in items]
        basis = [e for _, e in items]
        solver = SpanSolver()
        for name, e in items:
            if not solver.add(e.terms):
                raise LinearlyDependent(f"{name} lies in the span of the preceding elements")
        d = len(basis)
        c: list[list[dict]] = [[{} for _ in range(d)] for _ in range(d)]
        for i, j in combinations(range(d), 2):
            br = commutator(basis[i], basis[j])
            if not br:
                continue
            coords = solver.coordinates(br.terms)
            if coords is None:
                raise NotClosed((names[i], names[j]), OperatorPoly(solver.residual(br.terms)))
            sparse = {k: x for k, x in enumerate(coords) if x}
            c[i][j] = sparse
            c[j][i] = {k: -x for k, x in sparse.items()}
        return cls(names, basis, c, solver, label)

    # -- basic queries ----------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __getitem__(self, name: str) -> OperatorPoly:
        return self.basis[self.names.index(name)]

    def structure_constant(self, i: int, j: int, k: int) -> RadicalScalar:
        return self._c[i][j].get(k, ZERO)

    def bracket_coords(self, i: int, j: int) -> dict:
        return dict(self._c[i][j])

    def coordinates(self, x: OperatorPoly) -> list[RadicalScalar] | None:
        return self._solver.coordinates(x.terms)

    def contains(self, x: OperatorPoly) -> bool:
        return self._solver.contains(x.terms)

    def element(self, coords: Sequence) -> OperatorPoly:
        return linear_combination(coords, self.basis)

    def describe(self, x: OperatorPoly | Sequence) -> str:
        """Render an element as a combination of the basis names."""
        coords = self.coordinates(x) if isinstance(x, OperatorPoly) else list(x)
        if coords is None:
            raise ValueError("element is outside the algebra")
        return format_combination(coords, self.names)

    def bracket(self, x: Sequence, y: Sequence) -> list[RadicalScalar]:
        """Bracket of two coordinate vectors, via structure constants."""
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in self._c[i][j].items():
                    out[k] = out[k] + ab * c
        return out

    def ad_matrix(self, x: OperatorPoly | Sequence) -> list[list[RadicalScalar]]:
        """Matrix of ``ad x``; column ``j`` holds the coordinates of ``[x, b_j]``."""
        coords = self.coordinates(x) if isinstance(x, OperatorPoly) else list(x)
        if coords is None:
            raise ValueError("element is outside the algebra")
        d = self.dim
        m = [[ZERO] * d for _ in range(d)]
        for j in range(d):
            col = self.bracket(coords, [ONE if k == j else ZERO for k in range(d)])
            for i in range(d):
                m[i][j] = col[i]
        return m

    # -- invariants -------------------------------------------------------
    def jacobi_residuals(self) -> list[tuple[int, int, int]]:
        """Triples whose Jacobi sum is nonzero in structure constants."""
        bad = []
        d = self.dim
        for i, j, k in combinations(range(d), 3):
            acc: dict = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for m, x in self._c[a][b].items():
                    for n, y in self._c[m][c].items():
                        acc[n] = acc.get(n, ZERO) + x * y
            if any(acc.values()):
                bad.append((i, j, k))
        return bad

    def killing_matrix(self) -> list[list[RadicalScalar]]:
        if self._killing is None:
            d = self.dim
            K = [[ZERO] * d for _ in range(d)]
            for i in range(d):
                for j in range(i, d):
                    acc = ZERO
                    for k in range(d):
                        for l, x in self._c[i][k].items():
                            y = self._c[j][l].get(k)
                            if y:
                                acc = acc + x * y
                    K[i][j] = K[j][i] = acc
            self._killing = K
        return [row[:] for row in self._killing]

    def killing(self, x: Sequence, y: Sequence) -> RadicalScalar:
        K = self._killing or self.killing_matrix()
        acc = ZERO
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b and K[i][j]:
                        acc = acc + a * K[i][j] * b
        return acc

    def is_semisimple(self) -> bool:
        return self.dim > 0 and rank(self.killing_matrix()) == self.dim

    # -- ideals -----------------------------------------------------------
    def center(self) -> list[list[RadicalScalar]]:
        """Coordinate basis of the kernel of the adjoint map."""
        d = self.dim
        rows = []
        for j in range(d):
            for k in range(d):
                row = [self._c[i][j].get(k, ZERO) for i in range(d)]
                if any(row):
                    rows.append(row)
        return _normalize(nullspace(rows, d))

    def derived_algebra(self) -> list[list[RadicalScalar]]:
        d = self.dim
        rows = []
        for i, j in combinations(range(d), 2):
            if self._c[i][j]:
                rows.append([self._c[i][j].get(k, ZERO) for k in range(d)])
        if not rows:
            return []
        R, piv = rref(rows, d)
        return R[: len(piv)]

    def radical(self) -> list[list[RadicalScalar]]:
        """Killing-orthogonal complement of ``[L, L]`` (Cartan's criterion)."""
        derived = self.derived_algebra()
        K = self.killing_matrix()
        d = self.dim
        rows = []
        for v in derived:
            row = [sum((K[i][j] * v[j] for j in range(d) if v[j]), ZERO) for i in range(d)]
            if any(row):
                rows.append(row)
        rad = _normalize(nullspace(rows, d))
        if not self.is_solvable(rad):
            raise AssertionError("computed radical is not solvable")
        return rad

    def derived_series(self, sub: Sequence[Sequence]) -> list[int]:
        """Dimensions along the derived series of the span of ``sub``."""
        dims = []
        current = [list(v) for v in sub if any(v)]
        while True:
            r = rank(current) if current else 0
            dims.append(r)
            if r == 0:
                return dims
            if len(dims) > 1 and dims[-1] == dims[-2]:
                return dims
            nxt = []
            for a, b in combinations(current, 2):
                br = self.bracket(a, b)
                if any(br):
                    nxt.append(br)
            if nxt:
                R, piv = rref(nxt, self.dim)
                nxt = R[: len(piv)]
            current = nxt

    def is_solvable(self, sub: Sequence[Sequence]) -> bool:
        return self.derived_series(sub)[-1] == 0

    def subalgebra(self, coords: Sequence[Sequence], names: Sequence[str] | None = None, label="") -> LieAlgebra:
        """Build the subalgebra spanned by coordinate vectors as its own LieAlgebra."""
        if names is None:
            names = [self.describe(v) for v in coords]
        return LieAlgebra.from_generators(
            [(n, self.element(v)) for n, v in zip(names, coords)], label=label
        )

    def levi_decomposition(self) -> LeviDecomposition:
        rad = self.radical()
        cen = self.center()
        if rank(rad + cen) != len(cen) or len(rad) != len(cen):
            raise NotReductive(
                f"radical (dim {len(rad)}) differs from center (dim {len(cen)})"
            )
        levi = self.derived_algebra()
        if len(rad) + len(levi) != self.dim or rank(rad + levi) != self.dim:
            raise NotReductive("radical and derived algebra do not span the algebra")
        if levi:
            sub = self.subalgebra(levi)
            if not sub.is_semisimple():
                raise NotReductive("derived algebra is not semisimple")
        return LeviDecomposition(self, rad, levi)

    # -- export -----------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "label": self.label,
            "dimension": self.dim,
            "names": self.names,
            "basis": {n: b.to_json() for n, b in zip(self.names, self.basis)},
            "structure_constants": [
                {"i": self.names[i], "j": self.names[j], "k": self.names[k], "value": x.to_json()}
                for i, j in combinations(range(self.dim), 2)
                for k, x in sorted(self._c[i][j].items())
            ],
            "killing": [[x.to_json() for x in row] for row in self.killing_matrix()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self):
        return f"LieAlgebra({self.label or 'unnamed'}, dim={self.dim})"


def _normalize(vectors: list[list[RadicalScalar]]) -> list[list[RadicalScalar]]:
    # scale each vector so its last nonzero coordinate is 1
    out = []
    for v in vectors:
        last = next(x for x in reversed(v) if x)
        inv = last.inverse()
        out.append([x * inv if x else x for x in v])
    return out


@dataclass
class LeviDecomposition:
    algebra: LieAlgebra
    radical: list[list[RadicalScalar]]
    levi: list[list[RadicalScalar]]
    witness: list[list[RadicalScalar]] = field(default_factory=list)

    def __post_init__(self):
        # rows = radical basis followed by Levi basis; invertible by construction
        self.witness = [list(v) for v in self.radical] + [list(v) for v in self.levi]

    @property
    def radical_elements(self) -> list[OperatorPoly]:
        return [self.algebra.element(v) for v in self.radical]

    @property
    def levi_elements(self) -> list[OperatorPoly]:
        return [self.algebra.element(v) for v in self.levi]

    def describe(self) -> dict:
        L = self.algebra
        return {
            "radical": [L.describe(v) for v in self.radical],
            "levi": [L.describe(v) for v in self.levi],
            "dim_radical": len(self.radical),
            "dim_levi": len(self.levi),
        }


def is_subalgebra(candidate: Sequence[OperatorPoly], L: LieAlgebra | None = None) -> tuple[bool, dict]:
    """Check that ``candidate`` closes under brackets (and lies inside ``L``).

    Returns ``(ok, witness)``.  On success the witness holds the dimension of
    the span; on failure it names the reason and the offending data.
    """
    solver = SpanSolver()
    kept = []
    for idx, x in enumerate(candidate):
        if L is not None and not L.contains(x):
            return False, {"reason": "outside host", "index": idx}
        if solver.add(x.terms):
            kept.append(x)
    for a, b in combinations(range(len(kept)), 2):
        br = commutator(kept[a], kept[b])
        if br and not solver.contains(br.terms):
            return False, {
                "reason": "not closed",
                "pair": (a, b),
                "residual": OperatorPoly(solver.residual(br.terms)),
            }
    return True, {"dimension": len(kept)}
