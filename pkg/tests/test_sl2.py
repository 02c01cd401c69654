from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieboson.bosons import OperatorPoly
from lieboson.errors import NotBilinear, NotSl2
from lieboson.models import build
from lieboson.scalar import ONE, ZERO, RadicalScalar
from lieboson.sl2 import (
    WeightedDynkinDiagram as WDD,
    defining_matrix,
    enumerate_classes,
    exp_ad,
    jordan_triple,
    partition_to_wdd,
    partitions,
    verify_triple,
    wdd,
)


def diag(*xs):
    n = len(xs)
    return [[RadicalScalar.rational(xs[i]) if i == j else ZERO for j in range(n)] for i in range(n)]


def test_w_triple_valid():
    _, spec = build("u3")
    W = spec.jsets["W"]
    t = verify_triple(W.Jp, W.Jm, W.J0 * 2)
    assert t.x == W.Jp


def test_l_triple_valid():
    _, spec = build("u3")
    L = spec.jsets["L"]
    verify_triple(L.Jp, L.Jm, L.J0 * 2)


def test_bad_triple_reports_relation():
    _, spec = build("u3")
    with pytest.raises(NotSl2) as info:
        verify_triple(spec.g(2), spec.g(3), spec.g(1))
    assert info.value.residual


def test_defining_matrix_is_matrix_unit():
    _, spec = build("u2")
    M = defining_matrix(spec.g(2), spec.modes)
    assert M == [[ZERO, ONE], [ZERO, ZERO]]


def test_defining_matrix_l0():
    _, spec = build("u4")
    s, p = spec.species
    order = [s.mode(0), p.mode(1), p.mode(0), p.mode(-1)]
    assert defining_matrix(spec.jsets["L"].J0 * 2, order) == diag(0, 2, 0, -2)
    assert defining_matrix(spec.jsets["W"].J0 * 2, order) == diag(0, 1, 0, -1)


def test_defining_matrix_rejects_quartic():
    _, spec = build("u2")
    with pytest.raises(NotBilinear):
        defining_matrix(spec.g(1) * spec.g(1), spec.modes)


@pytest.mark.parametrize("model,jset,labels", [
    ("u4", "L", (2, 0, 2)),
    ("u4", "W", (1, 0, 1)),
    ("u4", "020", (0, 2, 0)),
    ("u4", "222", (2, 2, 2)),
    ("u3", "L", (2, 2)),
    ("u3", "W", (1, 1)),
    ("u2", "J", (2,)),
])
def test_model_diagrams(model, jset, labels):
    _, spec = build(model)
    assert wdd(spec.jsets[jset].triple(), spec.modes) == WDD(labels)


@pytest.mark.parametrize("lam,labels", [((3, 1), (2, 0, 2)), ((2, 1, 1), (1, 0, 1)), ((2, 2), (0, 2, 0)), ((4,), (2, 2, 2))])
def test_partition_to_wdd(lam, labels):
    assert partition_to_wdd(lam) == WDD(labels)


def test_enumerate_small():
    assert enumerate_classes(2) == [WDD((2,))]
    assert set(enumerate_classes(3)) == {WDD((1, 1)), WDD((2, 2))}
    assert set(enumerate_classes(4)) == {WDD((1, 0, 1)), WDD((2, 0, 2)), WDD((0, 2, 0)), WDD((2, 2, 2))}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_enumerate_agrees_with_partitions(n):
    oracle = {partition_to_wdd(lam) for lam in partitions(n) if lam[0] > 1}
    found = enumerate_classes(n)
    assert len(found) == len(set(found)) == len(oracle)
    assert set(found) == oracle


def test_partition_count():
    # p(n) for n = 1..8
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_enumerate_deterministic():
    assert enumerate_classes(5) == enumerate_classes(5)


def test_jordan_triple_rejects_size_mismatch():
    _, spec = build("u3")
    with pytest.raises(ValueError):
        jordan_triple((2, 2), spec.modes)


def test_diagram_text():
    assert str(WDD((1, 0, 1))) == "[1 0 1]"
    assert WDD((1, 0, 1)).compact == "[101]"


small = st.integers(-2, 2).map(Fraction)


@settings(max_examples=25, deadline=None)
@given(st.lists(small, min_size=6, max_size=6), st.sampled_from(["L", "W", "020", "222"]))
def test_wdd_conjugation_invariant(coeffs, name):
    _, spec = build("u4")
    # strictly upper-triangular hops in the mode order are ad-nilpotent
    modes = spec.modes
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    z = OperatorPoly()
    for c, (i, j) in zip(coeffs, pairs):
        if c:
            z = z + OperatorPoly({((modes[i],), (modes[j],)): c})
    J = spec.jsets[name]
    t = verify_triple(*(exp_ad(z, x) for x in (J.Jp, J.Jm, J.J0 * 2)))
    assert wdd(t, modes) == wdd(J.triple(), modes)
