"""Normal-ordered polynomials in multi-species boson operators.

A monomial is stored as a pair ``(creators, annihilators)`` of sorted mode
tuples; every product is rewritten into that form with
``a^k (a')^m = sum_j j! C(k,j) C(m,j) (a')^(m-j) a^(k-j)`` applied mode by mode.
Coefficients are :class:`~lieboson.scalar.RadicalScalar`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, NamedTuple

from .scalar import ONE, ZERO, RadicalScalar, as_scalar, format_coefficient

__all__ = [
    "Mode",
    "Species",
    "BosonFactor",
    "OperatorPoly",
    "commutator",
    "tilde",
    "linear_combination",
]


def _half(x) -> int | Fraction:
    x = Fraction(x)
    if x.denominator not in (1, 2):
        raise ValueError(f"{x} is not a half-integer")
    return int(x) if x.denominator == 1 else x


def _fmt_mu(mu) -> str:
    if mu == 0:
        return "0"
    return f"{'+' if mu > 0 else '-'}{abs(mu)}"


class Mode(NamedTuple):
    """One boson degree of freedom: component ``mu`` of species ``name``."""

    name: str
    mu: int | Fraction
    rank: int | Fraction

    def label(self) -> str:
        return self.name if self.rank == 0 else f"{self.name}[{_fmt_mu(self.mu)}]"


@dataclass(frozen=True)
class Species:
    name: str
    rank: int | Fraction = 0

    def __post_init__(self):
        object.__setattr__(self, "rank", _half(self.rank))
        if self.rank < 0:
            raise ValueError("species rank must be non-negative")

    @property
    def components(self) -> tuple:
        """Allowed projections, ascending from ``-rank``."""
        two_l = int(2 * self.rank)
        return tuple(_half(Fraction(-two_l + 2 * i, 2)) for i in range(two_l + 1))

    def mode(self, mu) -> Mode:
        mu = _half(mu)
        if mu not in self.components:
            raise ValueError(f"{self.name}: projection {mu} outside -{self.rank}..{self.rank}")
        return Mode(self.name, mu, self.rank)

    @property
    def modes(self) -> tuple[Mode, ...]:
        return tuple(self.mode(mu) for mu in self.components)

    def create(self, mu=0) -> OperatorPoly:
        return OperatorPoly({((self.mode(mu),), ()): ONE})

    def annihilate(self, mu=0) -> OperatorPoly:
        return OperatorPoly({((), (self.mode(mu),)): ONE})

    def tilde(self, mu=0) -> OperatorPoly:
        """Covariant annihilator ``(-1)^(l-mu) a_{-mu}``."""
        sign, factor = tilde(BosonFactor(self, _half(mu), "annihilation"))
        return sign * self.annihilate(factor.mu)


@dataclass(frozen=True)
class BosonFactor:
    species: Species
    mu: int | Fraction
    kind: str  # "creation" | "annihilation"

    def __post_init__(self):
        if self.kind not in ("creation", "annihilation"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        self.species.mode(self.mu)

    def as_poly(self) -> OperatorPoly:
        if self.kind == "creation":
            return self.species.create(self.mu)
        return self.species.annihilate(self.mu)


def tilde(f: BosonFactor) -> tuple[int, BosonFactor]:
    """Return ``(sign, factor)`` with ``f~ = sign * factor``."""
    if f.kind != "annihilation":
        raise ValueError("tilde is defined for annihilation factors only")
    sign = -1 if int(f.species.rank - f.mu) % 2 else 1
    return sign, BosonFactor(f.species, _half(-f.mu), "annihilation")


def _normal_product(a1: tuple, c2: tuple) -> list[tuple[int, Counter, Counter]]:
    """Normal-order ``annihilators a1`` times ``creators c2``.

    Returns ``(weight, remaining_creators, remaining_annihilators)`` triples.
    """
    ca, cc = Counter(a1), Counter(c2)
    shared = [m for m in ca if m in cc]
    out = [(1, Counter(cc), Counter(ca))]
    for m in shared:
        alpha, beta = ca[m], cc[m]
        nxt = []
        for w, rc, ra in out:
            for k in range(min(alpha, beta) + 1):
                wk = factorial(k) * comb(alpha, k) * comb(beta, k)
                c = Counter(rc)
                a = Counter(ra)
                c[m] -= k
                a[m] -= k
                nxt.append((w * wk, c, a))
        out = nxt
    return out


def _sorted(counter: Counter) -> tuple:
    return tuple(sorted(counter.elements()))


class OperatorPoly:
    """Normal-ordered boson polynomial with exact coefficients.

    Supports ``+``, ``-``, operator product ``*`` (also with scalars) and
    structural equality.  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                cre, ann = key
                key = (tuple(sorted(cre)), tuple(sorted(ann)))
                c = as_scalar(c)
                old = clean.get(key)
                if old is not None:
                    c = c + old
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> OperatorPoly:
        c = as_scalar(c)
        return cls._raw({((), ()): c} if c else {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, creators=(), annihilators=()) -> RadicalScalar:
        key = (tuple(sorted(creators)), tuple(sorted(annihilators)))
        return self._terms.get(key, ZERO)

    def modes(self) -> set[Mode]:
        out = set()
        for cre, ann in self._terms:
            out.update(cre)
            out.update(ann)
        return out

    def degree(self) -> int:
        return max((len(c) + len(a) for c, a in self._terms), default=0)

    def is_number_conserving(self) -> bool:
        return all(len(c) == len(a) for c, a in self._terms)

    def is_bilinear(self) -> bool:
        return all(len(c) == 1 and len(a) == 1 for c, a in self._terms)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, OperatorPoly):
            if isinstance(other, (int, Fraction, RadicalScalar)):
                other = OperatorPoly.constant(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            old = out.get(k)
            if old is None:
                out[k] = c
            else:
                s = old + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return OperatorPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return OperatorPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RadicalScalar)):
            other = OperatorPoly.constant(other)
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> OperatorPoly:
        c = as_scalar(c)
        if not c:
            return OperatorPoly._raw({})
        return OperatorPoly._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RadicalScalar)):
            return self.scale(other)
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        out: dict = {}
        for (c1, a1), x in self._terms.items():
            for (c2, a2), y in other._terms.items():
                xy = x * y
                if not a1 or not c2:
                    contractions = [(1, Counter(c2), Counter(a1))]
                else:
                    contractions = _normal_product(a1, c2)
                for w, rc, ra in contractions:
                    key = (
                        tuple(sorted(c1 + _sorted(rc))),
                        tuple(sorted(_sorted(ra) + a2)),
                    )
                    v = xy if w == 1 else xy * w
                    old = out.get(key)
                    out[key] = v if old is None else old + v
        return OperatorPoly._raw({k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RadicalScalar)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(as_scalar(other).inverse())

    def adjoint(self) -> OperatorPoly:
        return OperatorPoly._raw(
            {(ann, cre): c.conjugate() for (cre, ann), c in self._terms.items()}
        )

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RadicalScalar)):
            other = OperatorPoly.constant(other)
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering --------------------------------------------------------
    def _sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0]))

    def to_text(self, tilde_form: bool = True) -> str:
        """Physics notation, e.g. ``sqrt(2) p'[+1] p~[0] - s' s~``.

        With ``tilde_form`` annihilators are written as covariant tilde
        operators and the sign ``(-1)^(l+mu)`` is absorbed into the
        coefficient.
        """
        if not self._terms:
            return "0"
        parts = []
        for (cre, ann), c in self._sorted_terms():
            factors = [f"{m.name}'" + (f"[{_fmt_mu(m.mu)}]" if m.rank else "") for m in cre]
            for m in ann:
                if tilde_form:
                    if int(m.rank + m.mu) % 2:
                        c = -c
                    factors.append(f"{m.name}~" + (f"[{_fmt_mu(-m.mu)}]" if m.rank else ""))
                else:
                    factors.append(m.label())
            coef = format_coefficient(c)
            sign = "-" if coef.startswith("-") and not coef.startswith("(") else "+"
            coef = coef[1:] if sign == "-" else coef
            body = " ".join(factors)
            if not body:
                parts.append((sign, coef))
            elif coef == "1":
                parts.append((sign, body))
            else:
                parts.append((sign, f"{coef} {body}"))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_text

    def __repr__(self):
        return f"OperatorPoly({self.to_text(tilde_form=False)})"

    def to_json(self) -> list:
        def mode_json(m):
            mu = m.mu if isinstance(m.mu, int) else str(m.mu)
            rank = m.rank if isinstance(m.rank, int) else str(m.rank)
            return [m.name, mu, rank]

        return [
            {
                "creators": [mode_json(m) for m in cre],
                "annihilators": [mode_json(m) for m in ann],
                "coef": c.to_json(),
            }
            for (cre, ann), c in self._sorted_terms()
        ]

    @classmethod
    def from_json(cls, data) -> OperatorPoly:
        def mode(m):
            return Mode(m[0], _half(m[1]), _half(m[2]))

        return cls(
            {
                (
                    tuple(mode(m) for m in d["creators"]),
                    tuple(mode(m) for m in d["annihilators"]),
                ): RadicalScalar.from_json(d["coef"])
                for d in data
            }
        )


def commutator(a: OperatorPoly, b: OperatorPoly) -> OperatorPoly:
    return a * b - b * a


def linear_combination(coeffs: Iterable, elements: Iterable[OperatorPoly]) -> OperatorPoly:
    out: dict = {}
    for c, e in zip(coeffs, elements):
        c = as_scalar(c)
        if not c:
            continue
        for k, v in e._terms.items():
            w = v * c
            old = out.get(k)
            out[k] = w if old is None else old + w
    return OperatorPoly._raw({k: v for k, v in out.items() if v})
