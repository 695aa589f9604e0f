"""Acceptance suite: one check per shipped guarantee, exact tolerances.

Every identity is certified at symbolic zero; run with ``pytest -s`` to
see the per-criterion lines.
"""

import random

from qplane import ansatz as az
from qplane import oracle as orc
from qplane.coalgebra import TensorElement, check_hopf_axioms, coproduct
from qplane.covariance import check_bicovariance
from qplane.engine import AlgElement, ForeignSymbol, check_confluence
from qplane.gamma import consistency_of_calculus, run_graded_suite, sign_experiment
from qplane.parser import ParseError, fmt, parse
from qplane.presentations import PUBLIC_NAMES, catalog, derive_grouplike_rules
from qplane.scalars import Scalar

cat = catalog()
H = Scalar.monomial(h_exp=1)
E = Scalar.monomial(e_exp=1)


def _report(n, ok, text):
    print(f"{'PASS' if ok else 'FAIL'} criterion-{n}: {text}")
    assert ok, f"criterion-{n}: {text}"


def test_criterion_1_relation_suite():
    """Every displayed relation normalizes to exactly zero."""
    checked = 0
    for name in ("LIE", "GAMMA", "DERIV", "FORMS", "VECT", "HN"):
        p = cat.presentation(name)
        for r in p.rules:
            if r.provenance != "PAPER":
                continue
            rel = p.el({r.lhs: 1}) - AlgElement(p, dict(r.rhs))
            assert p.normalize(rel).is_zero(), (name, r.lhs)
            checked += 1
    _report(1, checked >= 35,
            f"{checked} defining relations normalize to zero")


def test_criterion_2_consistency_derivation():
    ok, witness = consistency_of_calculus()
    _report(2, ok, "d(commutator relation) reduces to zero via the exchange "
                   f"rules{'' if ok else ': ' + witness}")


def test_criterion_3_confluence():
    required = ("LIE", "GAMMA", "FORMS", "HN", "VECT")
    for name in required:
        fails = check_confluence(cat.presentation(name), 4)
        assert fails == [], (name, [f.describe() for f in fails[:2]])
    deriv_fails = check_confluence(cat.presentation("DERIV"), 4)
    status = ("locally confluent, no unresolved overlaps" if not deriv_fails
              else f"{len(deriv_fails)} unresolved overlaps, e.g. "
                   + deriv_fails[0].describe())
    _report(3, True,
            "LIE/GAMMA/FORMS/HN/VECT+G confluent through degree 4; "
            f"DERIV finding: {status}")


def test_criterion_4_hopf_axioms():
    total = 0
    for name in ("LIE", "FORMS", "VECT", "HN"):
        tables = cat.hopf_tables(name)
        res = check_hopf_axioms(tables, samples=100, seed=2024)
        bad = [r for r in res if not r[1]]
        assert not bad, (name, bad[:2])
        total += len(res)
    p = cat.hopf_tables("VECT").p
    g = p.normalize(p.el({("G",): 1}))
    assert coproduct(p.el({("G",): 1}), cat.hopf_tables("VECT")) == \
        TensorElement.of(g, g).slotwise_normal()
    ph = cat.presentation("HN")
    assert coproduct(ph.gen("K"), cat.hopf_tables("HN")) == \
        TensorElement.of(ph.gen("K"), ph.gen("K"))
    _report(4, True, f"{total} Hopf-axiom checks pass on generators and "
                     "100 seeded samples per algebra; the adjoined carrier "
                     "and the exponential symbol are group-like")


def test_criterion_5_bicovariance():
    records, findings = check_bicovariance("derived")
    bad = [r for r in records if not r[1]]
    assert not bad, bad[:3]
    assert not findings
    # comodule-map property for X holds under both tables; for Y only the
    # derived one -- emitted as the variant comparison finding.
    precs, pfinds = check_bicovariance("printed")
    x_ok = [r for r in precs if r[0].endswith("comodule-map-left.X")]
    assert x_ok and x_ok[0][1]
    assert any(f[0].endswith("comodule-map-left.Y") for f in pfinds)
    _report(5, True,
            "comodule coassociativity/counit laws, mixed compatibility and "
            "relation invariance pass exactly under the derived coaction; "
            "the comodule-map property holds for X under both variants and "
            "for Y under the derived variant (variant comparison -> finding)")


def test_criterion_6_graded_hopf():
    records, findings = run_graded_suite(samples=6, seed=99)
    bad = [r for r in records if not r[1]]
    assert not bad, bad[:3]
    _, verdict, signs = sign_experiment()
    assert signs == {"X": "+", "Y": "-"}
    assert "no uniform sign" in verdict
    _report(6, True,
            "counit kills the differentials, all three graded structure maps "
            "preserve the calculus relations (with the convolution-inverse "
            f"coinverse table); sign experiment verdict: {verdict}")


def test_criterion_7_ansatz_certification():
    u, const = az.UnknownScalar.var, az.UnknownScalar.const
    cons = az.generate_consistency_system()
    subs, reduced = az.reduce_by_forced_linear(cons)
    assert az.linear_span_contains(cons, u("B4") - u("B6") - const(H))
    assert az.linear_span_contains(cons, u("B3") - u("B5"))
    assert az.linear_span_contains(
        reduced, (u("B2") * (const(1) - u("A22"))).subs_partial(subs))
    # the printed simplification B3 = B5 = B8 carries a sign slip: the
    # mechanical system ties B8 to B5 with the opposite sign
    assert az.linear_span_contains(reduced, (u("B5") + u("B8")).subs_partial(subs))
    assert not az.linear_span_contains(reduced,
                                       (u("B5") - u("B8")).subs_partial(subs))
    full = az.generate_covariance_system(cons, "derived")
    residuals, pinned = az.verify_solution(full, az.SOLUTION)
    assert residuals == []
    assert pinned == {"M11": E, "M22": Scalar(1), "M12": Scalar(0),
                      "M21": Scalar(0)}
    assert az.specialized_rules_match_catalog() == []
    assert subs["A11"] == Scalar(1)  # vs the intermediate display value 0
    _report(7, True,
            "generated system contains B4-B6=h, B2(1-A22)=0, B3=B5 and ties "
            "B8 to B5 (mechanically B5=-B8; finding); the solution satisfies "
            "consistency+covariance with zero residual and reproduces the "
            "calculus rules; A11=A12=A21=1 forced (finding vs the displayed "
            "intermediate zeros)")


def test_criterion_8_oracle_suite():
    ok, wit = orc.verify_quantum_plane(8)
    assert ok, wit
    validated = 0
    for name in ("LIE_EXT", "GAMMA", "FORMS", "VECT", "HN"):
        for d in derive_grouplike_rules(name):
            assert d.status == "validated", d
            validated += 1
    out = orc.verify_T_to_HN(cutoff=4)
    assert out["exact"][0] and out["series"][0]
    ok, _ = orc.verify_quantum_plane(2, corrupt=True)
    assert not ok
    out = orc.verify_T_to_HN(cutoff=4, perturb="t1-norm")
    assert not out["series"][0]
    _report(8, True,
            "x*y - E*y*x vanishes through grade 8; all "
            f"{validated} derived catalog rules validated; the operator "
            "substitution passes exactly and in series; negative controls fail")


def test_criterion_9_parser_round_trip():
    fixtures = [
        ("LIE", "X*Y - Y*X - h*Y", lambda p, v: p.normalize(v).is_zero()),
        ("FORMS", "w1*w2 + E*w2*w1", lambda p, v: p.normalize(v).is_zero()),
        ("GAMMA", "Y @ eXi + 1 @ Y",
         lambda p, v: v == TensorElement(p, 2, {(("Y",), ("eXi",)): 1,
                                                ((), ("Y",)): 1})),
    ]
    for name, text, pred in fixtures:
        p = cat.presentation(name)
        assert pred(p, parse(text, p)), text
    for name in PUBLIC_NAMES + ("LIE_EXT", "VECT_H"):
        p = cat.presentation(name)
        rng = random.Random(2024)
        for _ in range(1000):
            e = p.random_element(rng, max_len=3)
            assert p.normalize(parse(fmt(e), p)) == e
    _report(9, True, "1000 seeded round-trips per presentation and all "
                     "fixture expressions parse to the stated values")
