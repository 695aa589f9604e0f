import random

import pytest

from qplane.coalgebra import TensorElement
from qplane.engine import ForeignSymbol
from qplane.parser import ParseError, fmt, parse
from qplane.presentations import PUBLIC_NAMES, catalog
from qplane.scalars import Scalar

cat = catalog()
H = Scalar.monomial(h_exp=1)
E = Scalar.monomial(e_exp=1)


def test_lie_relation_fixture():
    p = cat.presentation("LIE")
    e = parse("X*Y - Y*X - h*Y", p)
    assert p.normalize(e).is_zero()


def test_forms_relation_fixture():
    p = cat.presentation("FORMS")
    e = parse("w1*w2 + E*w2*w1", p)
    assert p.normalize(e).is_zero()


def test_tensor_fixture():
    p = cat.presentation("GAMMA")
    t = parse("Y @ eXi + 1 @ Y", p)
    assert t == TensorElement(p, 2, {(("Y",), ("eXi",)): 1, ((), ("Y",)): 1})


def test_format_canonical_order():
    p = cat.presentation("LIE")
    e = p.el({("Y", "X"): 1, ("Y",): H})
    assert fmt(e) == "Y*X + h*Y"
    assert fmt(p.zero()) == "0"


def test_format_tensor():
    p = cat.presentation("LIE_EXT")
    t = TensorElement(p, 2, {(("X",), ()): 1, ((), ("X",)): 1})
    assert fmt(t) == "X @ 1 + 1 @ X"


def test_scalar_coefficient_syntax():
    p = cat.presentation("GAMMA")
    e = parse("(1 - E)/h*Y", p)
    assert e == p.gen("Y").scaled((Scalar(1) - E) / H)
    e = parse("E^-1*dY + 1/2*dX", p)
    assert e.coefficient(("dY",)) == Scalar.monomial(e_exp=-1)
    from fractions import Fraction
    assert e.coefficient(("dX",)) == Scalar(Fraction(1, 2))


def test_powers_and_parens():
    p = cat.presentation("LIE")
    assert parse("X^3", p) == p.el({("X", "X", "X"): 1})
    assert parse("(X + Y)^2 - X^2 - X*Y - Y*X - Y^2", p).normal().is_zero()


def test_unknown_generator_has_span():
    p = cat.presentation("LIE")
    with pytest.raises(ForeignSymbol) as ei:
        parse("X*Zq + Y", p)
    span = ei.value.span
    assert span is not None and 0 <= span[0] < span[1] <= len("X*Zq + Y")


def test_syntax_error_has_span():
    p = cat.presentation("LIE")
    for text in ("X**Y", "X +", "(X", "X @ @ Y", ""):
        with pytest.raises(ParseError) as ei:
            parse(text, p)
        span = ei.value.span
        assert span is not None
        assert 0 <= span[0] <= span[1] <= len(text)


def test_division_rules():
    p = cat.presentation("LIE")
    assert parse("X/2", p) == p.gen("X").scaled(Scalar(1) / 2)
    with pytest.raises(ParseError):
        parse("X/Y", p)


def test_tensor_arity_mismatch():
    p = cat.presentation("GAMMA")
    with pytest.raises(ParseError):
        parse("X @ Y + X @ Y @ Y", p)


@pytest.mark.parametrize("name", PUBLIC_NAMES + ("LIE_EXT", "VECT_H"))
def test_round_trip_random(name):
    p = cat.presentation(name)
    rng = random.Random(42)
    for _ in range(120):
        e = p.random_element(rng, max_len=3)
        text = fmt(e)
        back = parse(text, p)
        assert p.normalize(back) == e, text


def test_round_trip_is_identity_on_canonical_text():
    p = cat.presentation("GAMMA")
    rng = random.Random(5)
    for _ in range(60):
        e = p.random_element(rng, max_len=3)
        assert fmt(parse(fmt(e), p)) == fmt(e)
