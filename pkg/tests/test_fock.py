import io
from math import comb

import numpy as np
import pytest

from lieboson.bosons import Species
from lieboson.casimir import model_operator
from lieboson.errors import ConvergenceError, NotHermitian, NotNumberConserving
from lieboson.fock import assign_half_integer, diagonalize, fock_basis, fock_matrix, write_matrix
from lieboson.models import build

from oracles import vibron_l2, w2_levels

TOL = 1e-8


def eigen(model, op, N):
    _, spec = build(model)
    return diagonalize(fock_matrix(model_operator(model, op), spec.modes, N))


def test_basis_size():
    _, spec = build("u4")
    for N in range(7):
        assert len(fock_basis(spec.modes, N)) == comb(N + 3, 3)
    assert fock_basis(spec.modes, 1)[0] == (1, 0, 0, 0)


@pytest.mark.parametrize("model", ["u2", "u2u2", "u3", "u4"])
@pytest.mark.parametrize("N", [0, 1, 3])
def test_number_operator_is_scalar(model, N):
    _, spec = build(model)
    M = fock_matrix(model_operator(model, "N"), spec.modes, N)
    assert np.allclose(M, N * np.eye(len(M)), atol=1e-12)


def test_l2_single_boson():
    assert eigen("u3", "L2", 1) == pytest.approx([2, 2, 2], abs=TOL)


def test_l2_two_bosons():
    assert eigen("u3", "L2", 2) == pytest.approx([0, 6, 6, 6, 6, 6], abs=TOL)


@pytest.mark.parametrize("N", range(7))
def test_l2_vibron_u3(N):
    assert eigen("u3", "L2", N) == pytest.approx(vibron_l2(N), abs=TOL)


@pytest.mark.parametrize("N", range(7))
def test_l2_vibron_u4(N):
    # s bosons are inert: sum the p-only spectra over n_p = 0..N
    expected = sorted(x for n in range(N + 1) for x in vibron_l2(n))
    assert eigen("u4", "L2", N) == pytest.approx(expected, abs=TOL)


def test_w2_single_boson_u4():
    assert eigen("u4", "W2", 1) == pytest.approx([0, 0, 0.75, 0.75], abs=TOL)


@pytest.mark.parametrize("model,singlets", [("u3", 1), ("u4", 2)])
@pytest.mark.parametrize("N", range(7))
def test_w2_levels(model, singlets, N):
    values = eigen(model, "W2", N)
    assert values == pytest.approx(w2_levels(N, singlets), abs=TOL)
    assert all(assign_half_integer(v) is not None for v in values)


def test_jacobi_against_numpy():
    rng = np.random.default_rng(7)
    for n in (1, 2, 5, 12, 30):
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = a + a.conj().T
        assert diagonalize(h) == pytest.approx(list(np.linalg.eigvalsh(h)), abs=1e-9)


def test_jacobi_on_model_operator_against_numpy():
    _, spec = build("u4")
    M = fock_matrix(model_operator("u4", "W2") + model_operator("u4", "L2") * 3, spec.modes, 4)
    assert diagonalize(M) == pytest.approx(list(np.linalg.eigvalsh(M)), abs=1e-9)


def test_trivial_matrices():
    assert diagonalize(np.eye(3)) == pytest.approx([1, 1, 1])
    assert diagonalize(np.diag([6.0, 0.0])) == pytest.approx([0, 6])
    assert diagonalize(np.zeros((0, 0))) == []


def test_not_hermitian():
    with pytest.raises(NotHermitian):
        diagonalize(np.array([[0, 1], [0, 0]]))


def test_sweep_limit():
    h = np.array([[1, 1], [1, -1]], dtype=float)
    with pytest.raises(ConvergenceError):
        diagonalize(h, max_sweeps=0)


def test_not_number_conserving():
    _, spec = build("u3")
    p = spec.species[0]
    with pytest.raises(NotNumberConserving):
        fock_matrix(p.create(1) * p.create(-1), spec.modes, 2)


def test_foreign_modes():
    _, spec = build("u3")
    s = Species("s")
    with pytest.raises(ValueError):
        fock_matrix(s.create() * s.annihilate(), spec.modes, 1)


def test_hermitian_operator_gives_hermitian_matrix():
    _, spec = build("u4")
    op = spec.g(2) + spec.g(2).adjoint() + spec.g(11) + spec.g(11).adjoint()
    assert op == op.adjoint()
    M = fock_matrix(op, spec.modes, 3)
    assert np.max(np.abs(M - M.conj().T)) < 1e-12


def test_write_matrix_roundtrip():
    m = np.array([[1 + 2j, 0], [0.5, -1j]])
    buf = io.StringIO()
    write_matrix(m, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "2 2"
    back = np.array([[complex(*map(float, z.split(","))) for z in row.split()] for row in lines[1:]])
    assert np.array_equal(back, m)


@pytest.mark.parametrize("value,w", [(0, 0), (0.75, 0.5), (2, 1), (3.75, 1.5), (1.0, None), (-1, None)])
def test_assign_half_integer(value, w):
    assert assign_half_integer(value) == w
