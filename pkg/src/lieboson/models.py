"""Built-in boson models u(2), u(2)+u(2), u(3), u(4) and their subalgebra lattices.

Generators are produced by tensor coupling of creation and tilde tensors.
Lattice nodes and inclusion edges are curated data, and :func:`build`
machine-checks every one of them: each node must close under brackets, have
the recorded dimension, semisimplicity and (for A1 nodes) weighted Dynkin
diagram, and each edge must be an inclusion of spans.  A transcription error
aborts the build.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .algebra import LieAlgebra, is_subalgebra
from .angular import couple, creation_tensor, tilde_tensor
from .bosons import Mode, OperatorPoly, Species
from .errors import LieBosonError
from .scalar import sqrt
from .sl2 import WeightedDynkinDiagram, verify_triple, wdd
from .tensors import JSet

__all__ = [
    "MODEL_NAMES",
    "LatticeNode",
    "LatticeEdge",
    "Chain",
    "ModelSpec",
    "BuildError",
    "build",
    "chains",
    "semisimple_sheet_chains",
    "tensor_host",
]

MODEL_NAMES = ("u2", "u2u2", "u3", "u4")


class BuildError(LieBosonError):
    pass


@dataclass
class LatticeNode:
    name: str
    label: str
    dim: int
    semisimple: bool
    sheet: str  # colour in the classification diagram: "semisimple" or "non-semisimple"
    elements: list[tuple[str, OperatorPoly]] | None = None
    wdd: WeightedDynkinDiagram | None = None
    jset: JSet | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "label": self.label,
            "dim": self.dim,
            "semisimple": self.semisimple,
            "sheet": self.sheet,
            "elements": [n for n, _ in self.elements] if self.elements is not None else None,
            "wdd": self.wdd.to_json() if self.wdd else None,
            "note": self.note,
        }


@dataclass
class LatticeEdge:
    parent: str
    child: str
    excluded: bool = False
    status: str = "unchecked"  # verified | excluded | unverifiable

    def to_json(self) -> dict:
        return {"parent": self.parent, "child": self.child, "excluded": self.excluded, "status": self.status}


@dataclass(frozen=True)
class Chain:
    nodes: tuple[str, ...]
    labels: tuple[str, ...] = ()

    def __str__(self):
        return " > ".join(self.nodes)


@dataclass
class ModelSpec:
    name: str
    species: tuple[Species, ...]
    modes: tuple[Mode, ...]
    generators: dict[str, OperatorPoly]
    nodes: dict[str, LatticeNode] = field(default_factory=dict)
    edges: list[LatticeEdge] = field(default_factory=list)
    jsets: dict[str, JSet] = field(default_factory=dict)
    root: str = ""
    chain_labels: dict[tuple[str, ...], tuple[str, ...]] = field(default_factory=dict)

    def g(self, i: int) -> OperatorPoly:
        return self.generators[f"g{i}"]

    def lattice_json(self) -> dict:
        return {
            "model": self.name,
            "root": self.root,
            "nodes": [n.to_json() for n in self.nodes.values()],
            "edges": [e.to_json() for e in self.edges],
        }


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def _bilinears(cre: Species, ann: Species, rank) -> list[OperatorPoly]:
    return list(couple(creation_tensor(cre), tilde_tensor(ann), rank).components)


def _u2_generators(s: Species, t: Species, offset: int = 0) -> dict[str, OperatorPoly]:
    gens = {}
    for i, (a, b) in enumerate(((s, s), (s, t), (t, s), (t, t)), start=1 + offset):
        (gens[f"g{i}"],) = _bilinears(a, b, 0)
    return gens


def _u3_generators(p: Species) -> dict[str, OperatorPoly]:
    comps = _bilinears(p, p, 0) + _bilinears(p, p, 1) + _bilinears(p, p, 2)
    return {f"g{i}": c for i, c in enumerate(comps, start=1)}


def _u4_generators(s: Species, p: Species) -> dict[str, OperatorPoly]:
    gens = _u3_generators(p)
    extra = _bilinears(s, p, 1) + _bilinears(p, s, 1) + _bilinears(s, s, 0)
    gens.update({f"g{i}": c for i, c in enumerate(extra, start=10)})
    return gens


# ---------------------------------------------------------------------------
# lattice data
# ---------------------------------------------------------------------------

Elements = Callable[[dict], list[tuple[str, OperatorPoly]]]


def _named(g: dict, *names: str) -> list[tuple[str, OperatorPoly]]:
    return [(n, g[n]) for n in names]


def _lattice_u2(g, spec):
    nodes = [
        LatticeNode("u2", "u(2) = u(1) + su(2)", 4, False, "non-semisimple", _named(g, "g1", "g2", "g3", "g4")),
        LatticeNode("u1", "u(1)", 1, False, "non-semisimple", [("g1+g4", g["g1"] + g["g4"])]),
        LatticeNode(
            "su2", "su(2)", 3, True, "semisimple",
            [("g1-g4", g["g1"] - g["g4"]), ("g2", g["g2"]), ("g3", g["g3"])],
            wdd=WeightedDynkinDiagram((2,)), jset=spec.jsets["J"],
        ),
        LatticeNode("so2", "so(2)", 1, False, "semisimple", [("g1-g4", g["g1"] - g["g4"])]),
    ]
    edges = [("u2", "u1"), ("u2", "su2"), ("su2", "so2")]
    labels = {("u2", "u1"): ("[N]", "n_t"), ("u2", "su2", "so2"): ("[N]", "j", "mu")}
    return nodes, edges, labels


def _lattice_u2u2(g, spec):
    N1, N2 = g["g1"] + g["g4"], g["g5"] + g["g8"]
    h1, h2 = g["g1"] - g["g4"], g["g5"] - g["g8"]
    N12, h12 = N1 + N2, h1 + h2
    x12, y12 = g["g2"] + g["g6"], g["g3"] + g["g7"]
    nodes = [
        LatticeNode("u2+u2", "u1(2) + u2(2)", 8, False, "non-semisimple",
                    _named(g, *(f"g{i}" for i in range(1, 9)))),
        LatticeNode("u1+u1", "u1(1) + u2(1)", 2, False, "non-semisimple",
                    [("g1+g4", N1), ("g5+g8", N2)]),
        LatticeNode("u12(2)", "u12(2) = u12(1) + su12(2)", 4, False, "non-semisimple",
                    [("g1+g4+g5+g8", N12), ("g1-g4+g5-g8", h12), ("g2+g6", x12), ("g3+g7", y12)]),
        LatticeNode("su2+su2", "su1(2) + su2(2)", 6, True, "semisimple",
                    [("g1-g4", h1), ("g2", g["g2"]), ("g3", g["g3"]),
                     ("g5-g8", h2), ("g6", g["g6"]), ("g7", g["g7"])]),
        LatticeNode("su12(2)", "su12(2)", 3, True, "semisimple",
                    [("g1-g4+g5-g8", h12), ("g2+g6", x12), ("g3+g7", y12)],
                    wdd=WeightedDynkinDiagram((0, 2, 0)), jset=spec.jsets["J12"]),
        LatticeNode("so2+so2", "so1(2) + so2(2)", 2, False, "semisimple", [("g1-g4", h1), ("g5-g8", h2)]),
        LatticeNode("so12(2)", "so12(2)", 1, False, "semisimple", [("g1-g4+g5-g8", h12)]),
        LatticeNode("u12(1)", "u12(1)", 1, False, "non-semisimple", [("g1+g4+g5+g8", N12)]),
    ]
    edges = [
        ("u2+u2", "u1+u1"), ("u2+u2", "u12(2)"), ("u2+u2", "su2+su2"),
        ("u1+u1", "u12(1)"), ("u12(2)", "u12(1)"), ("u12(2)", "su12(2)"),
        ("su2+su2", "su12(2)"), ("su2+su2", "so2+so2"),
        ("su12(2)", "so12(2)"), ("so2+so2", "so12(2)"),
    ]
    return nodes, edges, {}


def _lattice_u3(g, spec):
    L, W = spec.jsets["L"], spec.jsets["W"]
    nodes = [
        LatticeNode("u3", "u(3) = u(1) + su(3)", 9, False, "non-semisimple",
                    _named(g, *(f"g{i}" for i in range(1, 10)))),
        LatticeNode("u2[1,1]", "u(2) = u(1) + su(2)", 4, False, "non-semisimple",
                    _named(g, "g1", "g5", "g3", "g9"), wdd=WeightedDynkinDiagram((1, 1)), jset=W,
                    note="diagram marks the semisimple part"),
        LatticeNode("u2[2,2]", "u(2) = u(1) + su(2)", 4, False, "non-semisimple",
                    _named(g, "g1", "g2", "g3", "g4"), wdd=WeightedDynkinDiagram((2, 2)), jset=L,
                    note="diagram marks the semisimple part"),
        LatticeNode("su3", "su(3)", 8, True, "semisimple", _named(g, *(f"g{i}" for i in range(2, 10)))),
        LatticeNode("u1", "u(1)", 1, False, "non-semisimple", _named(g, "g1")),
        LatticeNode("su2[1,1]", "su(2)", 3, True, "semisimple", _named(g, "g5", "g3", "g9"),
                    wdd=WeightedDynkinDiagram((1, 1)), jset=W),
        LatticeNode("su2[2,2]", "su(2)", 3, True, "semisimple", _named(g, "g2", "g3", "g4"),
                    wdd=WeightedDynkinDiagram((2, 2)), jset=L),
        LatticeNode("so2", "so(2)", 1, False, "semisimple", _named(g, "g3")),
    ]
    edges = [
        ("u3", "u2[1,1]"), ("u3", "u2[2,2]"), ("u3", "su3"),
        ("u2[1,1]", "su2[1,1]"), ("u2[1,1]", "u1"),
        ("u2[2,2]", "su2[2,2]"), ("u2[2,2]", "u1"),
        ("su3", "su2[2,2]"), ("su3", "su2[1,1]"),
        ("su2[1,1]", "so2"), ("su2[2,2]", "so2"),
    ]
    return nodes, edges, {}


def _lattice_u4(g, spec, levi):
    J = spec.jsets
    a1 = spec._extra["a1a1_7"]
    so4 = spec._extra["a1a1_8"]
    nodes = [
        LatticeNode("u4", "u(4) = u(1) + su(4)", 16, False, "non-semisimple",
                    _named(g, *(f"g{i}" for i in range(1, 17)))),
        LatticeNode("A3", "su(4)", 15, True, "semisimple", levi),
        LatticeNode("B2", "so(5)", 10, True, "semisimple", None,
                    note="cataloged by name only; no explicit basis"),
        LatticeNode("A2", "su(3)", 8, True, "semisimple", _named(g, *(f"g{i}" for i in range(2, 10)))),
        LatticeNode("A1A1(8)", "so(4)", 6, True, "semisimple", so4),
        LatticeNode("A1A1(7)", "su(2)+su(2) block diagonal", 6, True, "semisimple", a1),
        LatticeNode("A1[222]", "A1", 3, True, "semisimple", _triple_elements(J["222"]),
                    wdd=WeightedDynkinDiagram((2, 2, 2)), jset=J["222"]),
        LatticeNode("A1[020]", "A1", 3, True, "semisimple", _triple_elements(J["020"]),
                    wdd=WeightedDynkinDiagram((0, 2, 0)), jset=J["020"]),
        LatticeNode("A1[101]", "A1 (W-set)", 3, True, "semisimple", _named(g, "g5", "g3", "g9"),
                    wdd=WeightedDynkinDiagram((1, 0, 1)), jset=J["W"]),
        LatticeNode("A1[202]", "A1 (L-set)", 3, True, "semisimple", _named(g, "g2", "g3", "g4"),
                    wdd=WeightedDynkinDiagram((2, 0, 2)), jset=J["L"]),
    ]
    edges = [
        ("u4", "A3"),
        ("A3", "A1A1(8)"), ("A3", "B2"), ("A3", "A2"),
        ("B2", "A1A1(7)"), ("B2", "A1[222]"), ("B2", "A1[020]"),
        ("A1A1(8)", "A1[020]"), ("A1A1(8)", "A1[202]"),
        ("A1A1(7)", "A1[020]", True),
        ("A1A1(7)", "A1[101]"),
        ("A2", "A1[101]"), ("A2", "A1[202]"),
    ]
    labels = {
        ("u4", "A3", "B2", "A1A1(7)", "A1[101]"): ("", "N", "t", "u", "w"),
    }
    return nodes, edges, labels


def _triple_elements(J: JSet) -> list[tuple[str, OperatorPoly]]:
    return [("J0", J.J0), ("J+", J.Jp), ("J-", J.Jm)]


# ---------------------------------------------------------------------------
# J-sets
# ---------------------------------------------------------------------------

def _l_set(g) -> JSet:
    # L0 = sqrt2 g3, L+ = -2 g4, L- = 2 g2
    return JSet(g["g3"] * sqrt(2), g["g4"] * -2, g["g2"] * 2, "L")


def _w_set(g) -> JSet:
    return JSet(g["g3"] / sqrt(2), g["g9"], g["g5"], "W")


def _u4_extra_sets(s: Species, p: Species) -> dict:
    S, P1, P0, Pm = s.mode(0), p.mode(1), p.mode(0), p.mode(-1)

    def e(i: Mode, j: Mode, c=1) -> OperatorPoly:
        return OperatorPoly({((i,), (j,)): c})

    r2 = sqrt(2) / 2
    # C^4 = C^2 x C^2 with |uu>=p1, |dd>=p-1, (|ud>+|du>)/sqrt2=p0, (|ud>-|du>)/sqrt2=s
    x1 = (e(P1, P0) - e(P1, S) + e(P0, Pm) + e(S, Pm)) * r2
    x2 = (e(P1, P0) + e(P1, S) + e(P0, Pm) - e(S, Pm)) * r2
    j1 = JSet.from_triple(verify_triple(x1, x1.adjoint(), e(P1, P1) - e(Pm, Pm) + e(P0, S) + e(S, P0), "K1"), "020")
    j2 = JSet.from_triple(verify_triple(x2, x2.adjoint(), e(P1, P1) - e(Pm, Pm) - e(P0, S) - e(S, P0), "K2"), "K2")
    # principal A1: spin 3/2 on (p1, p-1, s, p0); this ordering gives the
    # shortest multiplet labels among all orderings of the four modes
    xp = e(P1, Pm, sqrt(3)) + e(Pm, S, 2) + e(S, P0, sqrt(3))
    hp = e(P1, P1, 3) + e(Pm, Pm, 1) + e(S, S, -1) + e(P0, P0, -3)
    j222 = JSet.from_triple(verify_triple(xp, xp.adjoint(), hp, "P"), "222")
    # second A1 of the block-diagonal pair acts on (s, p0)
    xb = e(S, P0)
    jb = JSet.from_triple(verify_triple(xb, xb.adjoint(), e(S, S) - e(P0, P0), "B"), "B")
    return {"020": j1, "K2": j2, "222": j222, "B": jb}


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def build(name: str) -> tuple[LieAlgebra, ModelSpec]:
    """Construct and verify a built-in model."""
    if name not in MODEL_NAMES:
        raise KeyError(f"unknown model {name!r}; choose from {', '.join(MODEL_NAMES)}")
    if name == "u2":
        s, t = Species("s"), Species("t")
        species = (s, t)
        gens = _u2_generators(s, t)
        modes = (s.mode(0), t.mode(0))
    elif name == "u2u2":
        s1, t1, s2, t2 = Species("s1"), Species("t1"), Species("s2"), Species("t2")
        species = (s1, t1, s2, t2)
        gens = {**_u2_generators(s1, t1), **_u2_generators(s2, t2, offset=4)}
        modes = tuple(sp.mode(0) for sp in species)
    elif name == "u3":
        p = Species("p", 1)
        species = (p,)
        gens = _u3_generators(p)
        modes = (p.mode(1), p.mode(0), p.mode(-1))
    else:
        s, p = Species("s"), Species("p", 1)
        species = (s, p)
        gens = _u4_generators(s, p)
        modes = (s.mode(0), p.mode(1), p.mode(0), p.mode(-1))

    algebra = LieAlgebra.from_generators(gens, label=name)
    spec = ModelSpec(name, species, modes, gens)
    spec._extra = {}
    g = gens

    if name == "u2":
        spec.jsets["J"] = JSet.from_triple(verify_triple(g["g2"], g["g3"], g["g1"] - g["g4"], "J"), "J")
        nodes, edges, labels = _lattice_u2(g, spec)
        spec.root = "u2"
    elif name == "u2u2":
        spec.jsets["J1"] = JSet.from_triple(verify_triple(g["g2"], g["g3"], g["g1"] - g["g4"]), "J1")
        spec.jsets["J2"] = JSet.from_triple(verify_triple(g["g6"], g["g7"], g["g5"] - g["g8"]), "J2")
        spec.jsets["J12"] = JSet.from_triple(
            verify_triple(g["g2"] + g["g6"], g["g3"] + g["g7"], g["g1"] - g["g4"] + g["g5"] - g["g8"]), "J12"
        )
        nodes, edges, labels = _lattice_u2u2(g, spec)
        spec.root = "u2+u2"
    elif name == "u3":
        spec.jsets["L"] = _l_set(g)
        spec.jsets["W"] = _w_set(g)
        nodes, edges, labels = _lattice_u3(g, spec)
        spec.root = "u3"
    else:
        spec.jsets["L"] = _l_set(g)
        spec.jsets["W"] = _w_set(g)
        extra = _u4_extra_sets(*species)
        spec.jsets["020"] = extra["020"]
        spec.jsets["222"] = extra["222"]
        k1, k2 = extra["020"], extra["K2"]
        spec._extra["a1a1_8"] = _triple_elements(k1) + [("K2_0", k2.J0), ("K2+", k2.Jp), ("K2-", k2.Jm)]
        B = extra["B"]
        spec._extra["a1a1_7"] = _named(g, "g5", "g3", "g9") + [("B0", B.J0), ("B+", B.Jp), ("B-", B.Jm)]
        levi = algebra.levi_decomposition()
        levi_named = [(algebra.describe(v), algebra.element(v)) for v in levi.levi]
        nodes, edges, labels = _lattice_u4(g, spec, levi_named)
        spec.root = "u4"

    spec.nodes = {n.name: n for n in nodes}
    spec.edges = [LatticeEdge(e[0], e[1], excluded=len(e) > 2 and e[2]) for e in edges]
    spec.chain_labels = labels
    _verify_lattice(algebra, spec)
    return algebra, spec


def _verify_lattice(host: LieAlgebra, spec: ModelSpec) -> None:
    subs: dict[str, LieAlgebra] = {}
    for node in spec.nodes.values():
        if node.elements is None:
            continue
        polys = [e for _, e in node.elements]
        ok, witness = is_subalgebra(polys, host)
        if not ok:
            raise BuildError(f"{spec.name}/{node.name}: {witness}")
        if witness["dimension"] != node.dim:
            raise BuildError(f"{spec.name}/{node.name}: dimension {witness['dimension']} != {node.dim}")
        sub = LieAlgebra.from_generators(node.elements, label=node.name)
        subs[node.name] = sub
        if node.semisimple != sub.is_semisimple():
            raise BuildError(f"{spec.name}/{node.name}: semisimple flag disagrees with Killing form")
        if not node.semisimple and not sub.radical():
            raise BuildError(f"{spec.name}/{node.name}: non-semisimple node with zero radical")
        if node.wdd is not None:
            if node.jset is None:
                raise BuildError(f"{spec.name}/{node.name}: diagram without a triple")
            for x in (node.jset.J0, node.jset.Jp, node.jset.Jm):
                if not sub.contains(x):
                    raise BuildError(f"{spec.name}/{node.name}: J-set outside node")
            got = wdd(node.jset.triple(), spec.modes)
            if got != node.wdd:
                raise BuildError(f"{spec.name}/{node.name}: diagram {got} != recorded {node.wdd}")
    for edge in spec.edges:
        if edge.parent not in spec.nodes or edge.child not in spec.nodes:
            raise BuildError(f"{spec.name}: edge {edge.parent}->{edge.child} names unknown node")
        if edge.excluded:
            edge.status = "excluded"
            continue
        parent, child = subs.get(edge.parent), subs.get(edge.child)
        if parent is None or child is None:
            edge.status = "unverifiable"
            continue
        if not all(parent.contains(x) for x in child.basis):
            raise BuildError(f"{spec.name}: {edge.child} is not contained in {edge.parent}")
        edge.status = "verified"
    spec._subalgebras = subs


def chains(spec: ModelSpec, start: str | None = None) -> list[Chain]:
    """All maximal paths from ``start`` (default: root) along non-excluded edges."""
    start = start or spec.root
    children: dict[str, list[str]] = {}
    for e in spec.edges:
        if not e.excluded:
            children.setdefault(e.parent, []).append(e.child)
    out = []

    def walk(path):
        kids = children.get(path[-1], [])
        if not kids:
            nodes = tuple(path)
            out.append(Chain(nodes, spec.chain_labels.get(nodes, ())))
            return
        for k in kids:
            walk(path + [k])

    walk([start])
    return out


def semisimple_sheet_chains(spec: ModelSpec) -> list[Chain]:
    if spec.name != "u4":
        raise ValueError("the semisimple sheet chains are defined for u4")
    return chains(spec, "A3")


def tensor_host(name: str) -> LieAlgebra:
    """Algebra whose tensor content is reported for a model.

    For u3 this is the whole u(3), so the number operator shows up as a
    scalar.  For u4 it is the semisimple part su(4).
    """
    algebra, spec = build(name)
    if name == "u4":
        return spec._subalgebras["A3"]
    if name in ("u3", "u2", "u2u2"):
        return algebra
    raise KeyError(name)
