"""Exact scalars of the form sum_n q_n * sqrt(n).

Each radicand ``n`` is a squarefree positive integer and each ``q_n`` a
Gaussian rational.  Products of square roots are folded back into this form,
so the set is a ring; inversion goes through the regular representation over
Q(i).
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

__all__ = [
    "RadicalScalar",
    "ONE",
    "ZERO",
    "I",
    "UnsupportedClosure",
    "as_scalar",
    "sqrt",
    "squarefree_split",
    "format_coefficient",
]

_TRIAL_LIMIT = 10**6
_MAX_CLOSURE = 64


class UnsupportedClosure(ArithmeticError):
    """Raised when inversion would need more than 64 radicands."""


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``n == s*s*r`` and ``r`` squarefree."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    s, r = 1, 1
    m = n
    p = 2
    while p * p <= m and p <= _TRIAL_LIMIT:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1 if p == 2 else 2
    if m > 1:
        root = isqrt(m)
        if root * root == m:
            s *= root
        else:
            # leftover beyond the trial bound is assumed squarefree
            r *= m
    return s, r


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _ginv(a):
    d = a[0] * a[0] + a[1] * a[1]
    return (a[0] / d, -a[1] / d)


_Q0 = Fraction(0)
_Q1 = Fraction(1)


class RadicalScalar:
    """Immutable element of Q(i)[sqrt(2), sqrt(3), ...] in canonical form.

    ``terms`` maps squarefree radicand -> (real, imag) Fraction pair.  Zero
    coefficients are never stored, so two scalars are equal exactly when their
    term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for n, c in terms.items():
                re, im = (Fraction(c[0]), Fraction(c[1]))
                if re or im:
                    if n < 1:
                        raise ValueError(f"radicand must be >= 1, got {n}")
                    s, r = squarefree_split(n)
                    if s != 1:
                        re, im = re * s, im * s
                    old = clean.get(r)
                    if old is not None:
                        re, im = re + old[0], im + old[1]
                    if re or im:
                        clean[r] = (re, im)
                    else:
                        clean.pop(r, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, value, imag=0) -> RadicalScalar:
        re, im = Fraction(value), Fraction(imag)
        if not (re or im):
            return ZERO
        return cls._raw({1: (re, im)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def radicands(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        """True for an element of Q (radicand 1 only, no imaginary part)."""
        if not self._terms:
            return True
        c = self._terms.get(1)
        return len(self._terms) == 1 and c is not None and c[1] == 0

    def as_fraction(self) -> Fraction:
        if not self._terms:
            return _Q0
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms[1][0]

    def nterms(self) -> int:
        return len(self._terms)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for n, c in other._terms.items():
            old = out.get(n)
            if old is None:
                out[n] = c
            else:
                re, im = old[0] + c[0], old[1] + c[1]
                if re or im:
                    out[n] = (re, im)
                else:
                    del out[n]
        return RadicalScalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return RadicalScalar._raw({n: (-c[0], -c[1]) for n, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        out = {}
        for n1, c1 in self._terms.items():
            for n2, c2 in other._terms.items():
                g = gcd(n1, n2)
                r = (n1 // g) * (n2 // g)
                re = c1[0] * c2[0] - c1[1] * c2[1]
                im = c1[0] * c2[1] + c1[1] * c2[0]
                if g != 1:
                    re, im = re * g, im * g
                old = out.get(r)
                if old is not None:
                    re, im = re + old[0], im + old[1]
                out[r] = (re, im)
        return RadicalScalar._raw({n: c for n, c in out.items() if c[0] or c[1]})

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> RadicalScalar:
        return RadicalScalar._raw({n: (c[0], -c[1]) for n, c in self._terms.items()})

    def inverse(self) -> RadicalScalar:
        if not self._terms:
            raise ZeroDivisionError("inverse of zero RadicalScalar")
        if len(self._terms) == 1:
            (n, c), = self._terms.items()
            re, im = _ginv(c)
            return RadicalScalar._raw({n: (re / n, im / n)})
        return _regular_inverse(self)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- conversion -------------------------------------------------------
    def to_complex(self) -> complex:
        total = 0j
        for n, (re, im) in self._terms.items():
            root = n ** 0.5 if n != 1 else 1.0
            total += complex(float(re), float(im)) * root
        return total

    to_float = to_complex

    def __complex__(self):
        return self.to_complex()

    def to_json(self) -> list:
        return [
            {
                "radicand": n,
                "re": [c[0].numerator, c[0].denominator],
                "im": [c[1].numerator, c[1].denominator],
            }
            for n, c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data) -> RadicalScalar:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            {
                d["radicand"]: (Fraction(*d["re"]), Fraction(*d["im"]))
                for d in data
            }
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for n, (re, im) in sorted(self._terms.items()):
            coef = _format_gauss(re, im)
            parts.append(coef if n == 1 else f"{coef}*sqrt({n})")
        return " + ".join(parts)

    def __repr__(self):
        return f"RadicalScalar({self})"


def _format_gauss(re: Fraction, im: Fraction) -> str:
    if im == 0:
        return f"({re})"
    if re == 0:
        return f"({im})i"
    sign = "+" if im > 0 else "-"
    return f"({re}{sign}{abs(im)}i)"


def _format_term(q, n: int, imag: bool) -> str:
    """Magnitude of one term ``|q| i? sqrt(n)`` without its sign."""
    q = abs(q)
    rad = f"sqrt({n})" if n != 1 else ""
    unit = "i" if imag else ""
    if q == 1:
        num = ""
    elif q.denominator == 1:
        num = str(q)
    else:
        num = f"({q})"
    head = num + unit
    if head and rad:
        return f"{head}*{rad}"
    return head or rad or "1"


def format_coefficient(c: RadicalScalar) -> str:
    """Compact coefficient text: ``sqrt(3)``, ``-1/2``, ``(1/2)*sqrt(2)``, ``(-7 + 4*sqrt(3))``."""
    pieces = []
    for n, (re, im) in sorted(c.terms.items()):
        for q, imag in ((re, False), (im, True)):
            if q:
                pieces.append(("-" if q < 0 else "+", _format_term(q, n, imag)))
    if not pieces:
        return "0"
    if len(pieces) == 1:
        sign, body = pieces[0]
        if body.startswith("(") and body.index(")") == len(body) - 1:
            body = body[1:-1]
        return ("-" if sign == "-" else "") + body
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return f"({out})"


def _coerce(x):
    if isinstance(x, RadicalScalar):
        return x
    if isinstance(x, (int, Rational)):
        return RadicalScalar.rational(x)
    if isinstance(x, complex):
        raise TypeError("floating complex values cannot be coerced exactly")
    return NotImplemented


def as_scalar(x) -> RadicalScalar:
    """Coerce ints, Fractions and RadicalScalars; reject floats."""
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to RadicalScalar")
    return out


def sqrt(q) -> RadicalScalar:
    """Exact square root of a non-negative rational."""
    q = Fraction(q)
    if q < 0:
        return I * sqrt(-q)
    if q == 0:
        return ZERO
    # sqrt(a/b) = sqrt(a*b)/b
    s, r = squarefree_split(q.numerator * q.denominator)
    return RadicalScalar._raw({r: (Fraction(s, q.denominator), _Q0)})


def _radicand_closure(radicands) -> list[int]:
    closure = {1}
    frontier = list(radicands)
    while frontier:
        n = frontier.pop()
        new = []
        for m in closure:
            g = gcd(n, m)
            p = (n // g) * (m // g)
            if p not in closure:
                new.append(p)
        for p in new:
            if p not in closure:
                closure.add(p)
                frontier.append(p)
        if len(closure) > _MAX_CLOSURE:
            raise UnsupportedClosure(
                f"radicand closure exceeds {_MAX_CLOSURE} elements"
            )
    return sorted(closure)


def _regular_inverse(a: RadicalScalar) -> RadicalScalar:
    basis = _radicand_closure(a.radicands())
    index = {n: i for i, n in enumerate(basis)}
    d = len(basis)
    # column j = a * sqrt(basis[j]) in the basis
    rows = [[(_Q0, _Q0)] * (d + 1) for _ in range(d)]
    for j, m in enumerate(basis):
        for n, c in a._terms.items():
            g = gcd(n, m)
            r = (n // g) * (m // g)
            i = index[r]
            old = rows[i][j]
            rows[i][j] = (old[0] + c[0] * g, old[1] + c[1] * g)
    rows[0][d] = (_Q1, _Q0)
    # Gauss-Jordan over Q(i)
    for col in range(d):
        piv = next(r for r in range(col, d) if rows[r][col] != (_Q0, _Q0))
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = _ginv(rows[col][col])
        rows[col] = [_gmul(v, inv) for v in rows[col]]
        for r in range(d):
            f = rows[r][col]
            if r != col and f != (_Q0, _Q0):
                pr = rows[col]
                rows[r] = [
                    (v[0] - (f[0] * p[0] - f[1] * p[1]), v[1] - (f[0] * p[1] + f[1] * p[0]))
                    for v, p in zip(rows[r], pr)
                ]
    return RadicalScalar({basis[i]: rows[i][d] for i in range(d)})


ZERO = RadicalScalar._raw({})
ONE = RadicalScalar._raw({1: (_Q1, _Q0)})
I = RadicalScalar._raw({1: (_Q0, _Q1)})
