import json
import time

import pytest

from lieboson.algebra import LieAlgebra
from lieboson.errors import LieBosonError
from lieboson.models import BuildError, build, chains, semisimple_sheet_chains, tensor_host
from lieboson.scalar import sqrt


@pytest.mark.parametrize("model,dim,levi", [("u2", 4, 3), ("u2u2", 8, 6), ("u3", 9, 8), ("u4", 16, 15)])
def test_dimensions(model, dim, levi):
    algebra, _ = build(model)
    assert algebra.dim == dim
    assert len(algebra.levi_decomposition().levi) == levi


def test_unknown_model():
    with pytest.raises(KeyError):
        build("u9")


def test_builds_are_fast():
    build.cache_clear()
    start = time.perf_counter()
    for model in ("u2", "u2u2", "u3", "u4"):
        build(model)
    assert time.perf_counter() - start < 5


@pytest.mark.parametrize("model,count", [("u2", 2), ("u2u2", 5), ("u3", 6)])
def test_chain_counts(model, count):
    _, spec = build(model)
    assert len(chains(spec)) == count


def test_u4_semisimple_sheet():
    _, spec = build("u4")
    found = semisimple_sheet_chains(spec)
    assert len(found) == 7
    assert all(c.nodes[0] == "A3" for c in found)
    ends = [c.nodes[-1] for c in found]
    assert {"A1[101]", "A1[202]", "A1[020]", "A1[222]"} == set(ends)
    via_202 = {c.nodes[1] for c in found if c.nodes[-1] == "A1[202]"}
    assert via_202 == {"A2", "A1A1(8)"}
    assert ("A3", "B2", "A1A1(7)", "A1[101]") in [c.nodes for c in found]


def test_excluded_edge_not_walked():
    _, spec = build("u4")
    assert ("A3", "B2", "A1A1(7)", "A1[020]") not in [c.nodes for c in chains(spec, "A3")]
    excluded = [e for e in spec.edges if e.excluded]
    assert [(e.parent, e.child, e.status) for e in excluded] == [("A1A1(7)", "A1[020]", "excluded")]


def test_semisimple_sheet_only_for_u4():
    _, spec = build("u3")
    with pytest.raises(ValueError):
        semisimple_sheet_chains(spec)


def test_node_elements_match_annotations():
    _, u2 = build("u2")
    assert [e for _, e in u2.nodes["so2"].elements] == [u2.g(1) - u2.g(4)]
    _, u3 = build("u3")
    assert [n for n, _ in u3.nodes["su2[1,1]"].elements] == ["g5", "g3", "g9"]
    assert [n for n, _ in u3.nodes["su2[2,2]"].elements] == ["g2", "g3", "g4"]


@pytest.mark.parametrize("model", ["u2", "u2u2", "u3", "u4"])
def test_semisimple_flags_match_killing_form(model):
    _, spec = build(model)
    for node in spec.nodes.values():
        if node.elements is None:
            continue
        sub = LieAlgebra.from_generators(node.elements)
        assert sub.is_semisimple() == node.semisimple, node.name
        if not node.semisimple:
            assert sub.radical(), node.name


@pytest.mark.parametrize("model", ["u2", "u2u2", "u3", "u4"])
def test_edges_are_inclusions(model):
    _, spec = build(model)
    for edge in spec.edges:
        assert edge.status in {"verified", "excluded", "unverifiable"}
        if edge.status == "unverifiable":
            assert spec.nodes[edge.parent].elements is None or spec.nodes[edge.child].elements is None


def test_b2_cataloged_by_name():
    _, spec = build("u4")
    assert spec.nodes["B2"].elements is None
    assert spec.nodes["B2"].dim == 10


def test_two_sheets():
    _, spec = build("u3")
    sheets = {n.name: n.sheet for n in spec.nodes.values()}
    assert sheets["su3"] == "semisimple"
    assert sheets["u3"] == "non-semisimple"


def test_lattice_json_roundtrip():
    _, spec = build("u4")
    data = spec.lattice_json()
    assert json.loads(json.dumps(data)) == data
    assert data["root"] == "u4"
    assert {n["name"] for n in data["nodes"]} >= {"A3", "B2", "A2"}


def test_amnc_chain_labels():
    _, spec = build("u4")
    labelled = [c for c in chains(spec) if c.labels]
    assert [c.labels for c in labelled] == [("", "N", "t", "u", "w")]


def test_tensor_hosts():
    assert tensor_host("u4").dim == 15
    assert tensor_host("u3").dim == 9
    with pytest.raises(KeyError):
        tensor_host("u9")


def test_u4_radical_is_total_number():
    algebra, spec = build("u4")
    rad = algebra.radical()
    assert len(rad) == 1
    # normalized so the g16 coordinate is 1
    assert algebra.element(rad[0]) == spec.g(1) * sqrt(3) + spec.g(16)


def test_build_error_is_lieboson_error():
    assert issubclass(BuildError, LieBosonError)
