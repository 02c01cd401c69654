import cmath
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieboson.scalar import I, ONE, ZERO, RadicalScalar, UnsupportedClosure, format_coefficient, sqrt, squarefree_split


def test_like_terms_collect():
    assert sqrt(2) + sqrt(2) == sqrt(2) * 2
    assert (sqrt(2) + sqrt(2)).terms == {2: (Fraction(2), Fraction(0))}


def test_unlike_radicands_stay_separate():
    x = sqrt(2) + sqrt(3)
    assert x.terms == {2: (1, 0), 3: (1, 0)}
    assert x.nterms() == 2


def test_additive_identity():
    x = sqrt(5) * Fraction(3, 7) + I
    assert x + ZERO == x


def test_products():
    assert sqrt(2) * sqrt(2) == RadicalScalar.rational(2)
    assert sqrt(6) * sqrt(10) == sqrt(15) * 2
    assert I * I == -ONE


def test_inverses():
    assert sqrt(2).inverse() == sqrt(2) / 2
    assert (ONE + sqrt(2)).inverse() == sqrt(2) - 1
    assert (I * 2).inverse() == I * Fraction(-1, 2)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_three_radicand_inverse():
    x = ONE + sqrt(2) + sqrt(3) + I * sqrt(5)
    assert x * x.inverse() == ONE


def test_closure_cap():
    primes = [2, 3, 5, 7, 11, 13, 17]
    x = sum((sqrt(p) for p in primes), ZERO)
    with pytest.raises(UnsupportedClosure):
        x.inverse()


def test_to_float():
    assert abs(sqrt(2).to_complex() - 2**0.5) < 1e-15
    assert abs((-sqrt(3) / 2).to_complex() + 0.8660254037844386) < 1e-15
    assert abs((I * sqrt(2)).to_complex() - 1.4142135623730951j) < 1e-15


def test_sqrt_of_fraction_and_negative():
    assert sqrt(Fraction(1, 2)) == sqrt(2) / 2
    assert sqrt(-4) == I * 2
    assert sqrt(12) == sqrt(3) * 2


def test_squarefree_split():
    assert squarefree_split(60) == (2, 15)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(49) == (7, 1)


def test_text_and_json():
    x = sqrt(3) * Fraction(-1, 2) + I * sqrt(2) / 3
    assert str(x) == "(1/3)i*sqrt(2) + (-1/2)*sqrt(3)"  # ascending radicand
    data = json.loads(json.dumps(x.to_json()))
    assert RadicalScalar.from_json(data) == x
    assert format_coefficient(sqrt(3) * 4 - 7) == "(-7 + 4*sqrt(3))"
    assert format_coefficient(-sqrt(2) / 2) == "-(1/2)*sqrt(2)"


def test_non_canonical_input_is_canonicalized():
    x = RadicalScalar({8: (1, 0), 2: (-2, 0), 1: (0, 0)})
    assert x == ZERO
    assert RadicalScalar({12: (1, 0)}) == RadicalScalar({3: (2, 0)})
    assert RadicalScalar(RadicalScalar({12: (1, 0)}).terms) == RadicalScalar({12: (1, 0)})


def test_floats_rejected():
    with pytest.raises(TypeError):
        sqrt(2) + 0.5


# random small field elements over radicands {1, 2, 3, 6}
small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
elements = st.builds(
    lambda a, b, c, d, e: RadicalScalar({1: (a, e), 2: (b, 0), 3: (c, 0), 6: (d, 0)}),
    small, small, small, small, small,
)


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    if a:
        assert a * a.inverse() == ONE


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_float_homomorphism(a, b):
    for exact, approx in ((a + b, a.to_complex() + b.to_complex()), (a * b, a.to_complex() * b.to_complex())):
        assert cmath.isclose(exact.to_complex(), approx, rel_tol=1e-12, abs_tol=1e-12)
