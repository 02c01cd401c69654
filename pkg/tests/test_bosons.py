import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieboson.bosons import BosonFactor, OperatorPoly, Species, commutator, tilde
from lieboson.fock import fock_matrix
from lieboson.models import build
from lieboson.scalar import I, sqrt

s, t, p = Species("s"), Species("t"), Species("p", 1)


def test_contraction():
    assert p.annihilate(0) * p.create(0) == p.create(0) * p.annihilate(0) + OperatorPoly.constant(1)


def test_no_contraction_between_different_modes():
    assert p.annihilate(1) * p.create(-1) == p.create(-1) * p.annihilate(1)


def test_number_operator_squared():
    n = s.create() * s.annihilate()
    expected = s.create() * s.create() * s.annihilate() * s.annihilate() + n
    assert n * n == expected


def test_commutator_of_hops():
    # [s't, t's] = s's - t't
    lhs = commutator(s.create() * t.annihilate(), t.create() * s.annihilate())
    assert lhs == s.create() * s.annihilate() - t.create() * t.annihilate()


def test_w_ladder_closes():
    _, spec = build("u3")
    W = spec.jsets["W"]
    assert commutator(W.Jp, W.Jm) == W.J0 * 2


def test_antisymmetry():
    x = p.create(1) * p.annihilate(0) + s.create() * p.annihilate(-1) * sqrt(2)
    assert commutator(x, x).is_zero()


def test_tilde_signs():
    assert tilde(BosonFactor(p, 1, "annihilation")) == (1, BosonFactor(p, -1, "annihilation"))
    assert tilde(BosonFactor(p, -1, "annihilation")) == (1, BosonFactor(p, 1, "annihilation"))
    assert tilde(BosonFactor(p, 0, "annihilation")) == (-1, BosonFactor(p, 0, "annihilation"))
    assert tilde(BosonFactor(s, 0, "annihilation")) == (1, BosonFactor(s, 0, "annihilation"))
    with pytest.raises(ValueError):
        tilde(BosonFactor(p, 0, "creation"))


def test_tilde_convention_gives_standard_l0():
    # sqrt2 [p' x p~]^1_0 has eigenvalue mu on p'_mu
    _, spec = build("u3")
    L0 = spec.g(3) * sqrt(2)
    assert L0 == p.create(1) * p.annihilate(1) - p.create(-1) * p.annihilate(-1)


def test_adjoint_examples():
    hop = s.create() * t.annihilate()
    assert hop.adjoint() == t.create() * s.annihilate()
    _, spec = build("u2")
    g2 = spec.g(2)
    assert (g2 * I).adjoint() == g2.adjoint() * (-I)
    _, spec4 = build("u4")
    N = spec4.g(1) * sqrt(3) + spec4.g(16)
    assert N.adjoint() == N


def test_text_form():
    x = p.create(1) * p.tilde(0)
    assert x.to_text() == "p'[+1] p~[0]"
    assert (s.create() * s.annihilate() * -1).to_text() == "-s' s~"


def test_json_roundtrip():
    _, spec = build("u4")
    for g in spec.generators.values():
        assert OperatorPoly.from_json(json.loads(json.dumps(g.to_json()))) == g


def test_queries():
    x = p.create(1) * p.create(0) * p.annihilate(-1)
    assert x.degree() == 3
    assert not x.is_number_conserving()
    assert (p.create(1) * p.annihilate(0)).is_bilinear()


modes = [s.mode(0), p.mode(1), p.mode(0), p.mode(-1)]
small_int = st.integers(min_value=-2, max_value=2)


def _bilinear(coeffs):
    out = OperatorPoly()
    for (i, j), c in zip(((i, j) for i in range(4) for j in range(4)), coeffs):
        if c:
            out = out + OperatorPoly({((modes[i],), (modes[j],)): c})
    return out


bilinears = st.lists(small_int, min_size=16, max_size=16).map(_bilinear)


def _monomial(parts):
    cre, ann, c = parts
    return OperatorPoly({(tuple(modes[i] for i in cre), tuple(modes[i] for i in ann)): c})


polys = st.lists(
    st.tuples(st.lists(st.integers(0, 3), max_size=2), st.lists(st.integers(0, 3), max_size=2), small_int),
    min_size=1, max_size=3,
).map(lambda ms: sum((_monomial(m) for m in ms), OperatorPoly()))


@settings(max_examples=40, deadline=None)
@given(bilinears, bilinears, bilinears)
def test_jacobi_on_bilinears(a, b, c):
    total = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert total.is_zero()


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys)
def test_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_adjoint_is_involution_and_reverses_brackets(a, b):
    assert a.adjoint().adjoint() == a
    assert commutator(a, b).adjoint() == commutator(b.adjoint(), a.adjoint())


@settings(max_examples=25, deadline=None)
@given(bilinears, bilinears)
def test_products_match_fock_matrices(a, b):
    # number-conserving operators preserve each sector, so matrices multiply
    for N in (1, 2, 3):
        lhs = fock_matrix(a * b, modes, N)
        rhs = fock_matrix(a, modes, N) @ fock_matrix(b, modes, N)
        assert np.allclose(lhs, rhs, atol=1e-12)
