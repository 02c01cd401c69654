"""Numerical cross-checks on fixed-N occupation-number spaces.

Operators are turned into dense complex matrices on the basis of occupation
tuples with total boson number N, then diagonalized with a cyclic complex
Jacobi method.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import sqrt as fsqrt
from typing import Sequence, TextIO

import numpy as np

from .bosons import Mode, OperatorPoly
from .errors import ConvergenceError, NotHermitian, NotNumberConserving

__all__ = ["fock_basis", "fock_matrix", "diagonalize", "write_matrix", "assign_half_integer"]

OFFDIAG_TOL = 1e-10
MAX_SWEEPS = 100


def fock_basis(modes: Sequence[Mode], N: int) -> list[tuple[int, ...]]:
    """Occupation tuples with sum N, in reverse lexicographic order."""
    if N < 0:
        raise ValueError("N must be non-negative")
    n = len(modes)
    out = []
    for combo in combinations_with_replacement(range(n), N):
        occ = [0] * n
        for i in combo:
            occ[i] += 1
        out.append(tuple(occ))
    out.sort(reverse=True)
    return out


def fock_matrix(op: OperatorPoly, modes: Sequence[Mode], N: int) -> np.ndarray:
    """Matrix of a number-conserving operator on the N-boson sector."""
    index = {m: i for i, m in enumerate(modes)}
    missing = op.modes() - set(index)
    if missing:
        raise ValueError(f"operator acts on modes outside the model: {sorted(m.label() for m in missing)}")
    terms = []
    for (cre, ann), c in op.items():
        if len(cre) != len(ann):
            raise NotNumberConserving(f"monomial with {len(cre)} creators and {len(ann)} annihilators")
        terms.append(([index[m] for m in cre], [index[m] for m in ann], c.to_complex()))
    basis = fock_basis(modes, N)
    position = {occ: k for k, occ in enumerate(basis)}
    M = np.zeros((len(basis), len(basis)), dtype=complex)
    for col, occ in enumerate(basis):
        for cre, ann, c in terms:
            state = list(occ)
            amp = 1.0
            for i in ann:
                if state[i] == 0:
                    amp = 0.0
                    break
                amp *= fsqrt(state[i])
                state[i] -= 1
            if amp == 0.0:
                continue
            for i in cre:
                state[i] += 1
                amp *= fsqrt(state[i])
            M[position[tuple(state)], col] += c * amp
    return M


def diagonalize(m: np.ndarray, tol: float = OFFDIAG_TOL, max_sweeps: int = MAX_SWEEPS) -> list[float]:
    """Ascending eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation first removes the phase of the pivot element and then
    applies the real two-sided rotation that annihilates it.
    """
    A = np.array(m, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if A.size and np.max(np.abs(A - A.conj().T)) > 1e-10:
        raise NotHermitian("matrix is not Hermitian within 1e-10")
    A = (A + A.conj().T) / 2
    n = A.shape[0]

    def offdiag(a):
        return np.linalg.norm(a - np.diag(np.diag(a)))

    for _ in range(max_sweeps):
        if offdiag(A) < tol:
            return sorted(float(x) for x in np.real(np.diag(A)))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                r = abs(apq)
                if r < 1e-300:
                    continue
                phase = apq / r
                theta = (A[q, q].real - A[p, p].real) / (2 * r)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1))
                c = 1 / np.sqrt(t * t + 1)
                s = t * c
                G = np.array([[c, s * phase], [-s * np.conj(phase), c]])
                A[:, [p, q]] = A[:, [p, q]] @ G
                A[[p, q], :] = G.conj().T @ A[[p, q], :]
                A[p, q] = A[q, p] = 0
    if offdiag(A) < tol:
        return sorted(float(x) for x in np.real(np.diag(A)))
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def write_matrix(m: np.ndarray, stream: TextIO) -> None:
    """Row-major text: header ``rows cols``, then one row per line of ``re,im`` pairs."""
    rows, cols = m.shape
    stream.write(f"{rows} {cols}\n")
    for row in m:
        stream.write(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row) + "\n")


def assign_half_integer(value: float, tol: float = 1e-8) -> float | None:
    """The w >= 0 in steps of 1/2 with w(w+1) = value, if any."""
    if value < -tol:
        return None
    w = (-1 + np.sqrt(1 + 4 * max(value, 0.0))) / 2
    w2 = round(2 * w) / 2
    return w2 if abs(w2 * (w2 + 1) - value) < tol else None
