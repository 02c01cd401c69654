"""Reference values computed by routes that share no code with the library."""

from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb

import numpy as np


def cg_sympy(j1, m1, j2, m2, j, m) -> float:
    from sympy import Rational
    from sympy.physics.quantum.cg import CG

    R = lambda x: Rational(Fraction(x).numerator, Fraction(x).denominator)  # noqa: E731
    return float(CG(R(j1), R(m1), R(j2), R(m2), R(j), R(m)).doit())


def adjoint_signature(lam) -> list[Fraction]:
    """Ranks of sl(n) under an A1 of Jordan type ``lam``, from characters.

    The h-weights on sl(n) are the differences of defining weights (all
    ordered pairs) plus n-1 zeros; a rank-k multiplet contributes one weight
    at each of 2k, 2k-2, ..., -2k.
    """
    weights = [b - 1 - 2 * i for b in lam for i in range(b)]
    n = len(weights)
    mult = Counter(a - b for a in weights for b in weights)
    mult[0] -= 1  # remove the trace
    top = max(mult)
    ranks = []
    for w in range(top, -1, -1):
        count = mult[w] - mult.get(w + 2, 0)
        ranks += [Fraction(w, 2)] * count
    assert sum(int(2 * k) + 1 for k in ranks) == n * n - 1
    return sorted(ranks)


def vibron_l2(N: int) -> list[int]:
    """l(l+1) with multiplicity 2l+1 for l = N, N-2, ... >= 0."""
    out = []
    for l in range(N, -1, -2):
        out += [l * (l + 1)] * (2 * l + 1)
    return sorted(out)


def w2_levels(N: int, singlets: int) -> list[float]:
    """W^2 spectrum when the W-set acts as spin 1/2 on two modes.

    m bosons in the doublet carry spin m/2; the remaining N-m bosons sit in
    ``singlets`` inert modes in C(N-m+singlets-1, singlets-1) ways.
    """
    out = []
    for m in range(N + 1):
        w = m / 2
        deg = (m + 1) * comb(N - m + singlets - 1, singlets - 1) if singlets else (m + 1) * (m == N)
        out += [w * (w + 1)] * deg
    return sorted(out)


def brute_label_count(N: int) -> int:
    return sum(1 for t, u, w in product(range(N + 1), repeat=3) if w <= u <= t)


def numeric_killing(L) -> np.ndarray:
    ads = [np.array([[c.to_complex() for c in row] for row in L.ad_matrix(L.basis[i])]) for i in range(L.dim)]
    return np.array([[np.trace(a @ b) for b in ads] for a in ads])
