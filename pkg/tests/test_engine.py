import random

import pytest

from qplane.engine import (AlgElement, ForeignSymbol, GeneratorSym, NonTermination,
                           Presentation, RewriteRule, check_confluence,
                           exterior_delta)
from qplane.parser import fmt
from qplane.presentations import catalog
from qplane.scalars import Scalar

H = Scalar.monomial(h_exp=1)
E = Scalar.monomial(e_exp=1)

cat = catalog()
LIE = cat.presentation("LIE")
GAMMA = cat.presentation("GAMMA")


def test_normalize_commutator_rule():
    assert fmt(LIE.normalize(LIE.el({("X", "Y"): 1}))) == "Y*X + h*Y"


def test_normalize_calculus_rules():
    e = GAMMA.normalize(GAMMA.el({("Y", "dY"): 1}))
    assert e == GAMMA.el({("dY", "Y"): E})
    e = GAMMA.normalize(GAMMA.el({("dY", "dX"): 1}))
    assert e == GAMMA.el({("dX", "dY"): -1})
    assert GAMMA.normalize(GAMMA.el({("dX", "dX"): 1})).is_zero()


def test_normalize_unit():
    one = LIE.one()
    assert LIE.normalize(one) == one


def test_multiply_differentials():
    e = GAMMA.mul(GAMMA.gen("dX") + GAMMA.gen("dY"), GAMMA.gen("dX"))
    assert fmt(e) == "-dX*dY"


def test_multiply_reassociates():
    e = LIE.mul(LIE.gen("X"), LIE.mul(LIE.gen("Y"), LIE.gen("X")))
    assert e == LIE.el({("Y", "X", "X"): 1, ("Y", "X"): H})


def test_multiply_unit_law():
    rng = random.Random(3)
    for _ in range(20):
        a = GAMMA.random_element(rng)
        assert GAMMA.mul(a, GAMMA.one()) == a
        assert GAMMA.mul(GAMMA.one(), a) == a


def test_foreign_symbol():
    with pytest.raises(ForeignSymbol):
        LIE.el({("Z",): 1})
    with pytest.raises(ForeignSymbol):
        LIE.normalize({("X", "Q"): 1})


def test_step_budget():
    big = LIE.el({("X",) * 5 + ("Y",) * 5: 1})
    with pytest.raises(NonTermination):
        LIE.normalize(big, budget=3)
    assert not LIE.normalize(big).is_zero()


def test_rule_orientation_validated():
    gens = (GeneratorSym("a", 0, 0), GeneratorSym("b", 0, 1))
    with pytest.raises(ValueError):
        Presentation("BAD", gens, [RewriteRule(("a", "b"), {("b", "a"): 1})])
    with pytest.raises(ValueError):
        # parity-inhomogeneous
        godd = (GeneratorSym("a", 1, 0), GeneratorSym("b", 0, 1))
        Presentation("BAD2", godd, [RewriteRule(("b", "a"), {("b",): 1})])


def test_confluence_single_rule():
    assert check_confluence(LIE, 4) == []


def test_confluence_gamma():
    assert check_confluence(GAMMA, 4) == []


def test_confluence_negative_control():
    """Flipping the sign in the X*dX exchange breaks joinability."""
    rules = []
    for r in GAMMA.rules:
        if r.lhs == ("X", "dX"):
            rules.append(RewriteRule(("X", "dX"),
                                     {("dX", "X"): 1, ("dX",): H}))
        else:
            rules.append(r)
    bad = Presentation("GAMMA_BAD", GAMMA.gens, rules)
    fails = check_confluence(bad, 4)
    assert fails
    words = {f.word for f in fails}
    assert ("X", "Y", "dX") in words


def test_normalize_idempotent_and_order_independent():
    rng = random.Random(5)
    for _ in range(25):
        e = GAMMA.random_element(rng, max_len=4)
        n = GAMMA.normalize(e)
        assert GAMMA.normalize(n) == n
        assert GAMMA.normalize(e, rightmost=True) == n


def test_homomorphism_compatibility():
    rng = random.Random(9)
    for _ in range(20):
        raw_a = {tuple(rng.choice("XY") for _ in range(rng.randint(0, 3))): rng.randint(1, 3)}
        raw_b = {tuple(rng.choice("XY") for _ in range(rng.randint(0, 3))): rng.randint(1, 3)}
        a, b = LIE.el(raw_a), LIE.el(raw_b)
        assert LIE.mul(a, b) == LIE.mul(LIE.normalize(a), LIE.normalize(b))


def test_grading_preserved():
    rng = random.Random(1)
    for _ in range(25):
        w = tuple(rng.choice([g.name for g in GAMMA.gens]) for _ in range(4))
        par = GAMMA.parity(w)
        for w2, _ in GAMMA.normalize(GAMMA.el({w: 1})):
            assert GAMMA.parity(w2) == par


def test_defining_relations_normalize_to_zero():
    for name in ("LIE", "GAMMA", "DERIV", "FORMS", "VECT", "HN"):
        p = cat.presentation(name)
        for r in p.rules:
            rel = p.el({r.lhs: 1}) - AlgElement(p, dict(r.rhs))
            assert p.normalize(rel).is_zero(), (name, r.lhs)


def test_exterior_delta_leibniz():
    images = cat.gamma_delta_images
    x, y = GAMMA.gen("X"), GAMMA.gen("Y")
    dxy = exterior_delta(GAMMA.mul(x, y), images)
    want = GAMMA.normalize(GAMMA.mul(GAMMA.gen("dX"), y)
                           + GAMMA.mul(x, GAMMA.gen("dY")))
    assert dxy == want
    # odd factor to the left flips the sign of the inner differential
    dxdx = exterior_delta(GAMMA.el({("dX", "X"): 1}), images)
    assert dxdx == GAMMA.normalize(GAMMA.el({("dX", "dX"): -1}))
