import pytest

from qplane import ansatz as az
from qplane.scalars import Scalar

H = Scalar.monomial(h_exp=1)
E = Scalar.monomial(e_exp=1)
u = az.UnknownScalar.var
const = az.UnknownScalar.const


def canon_set(system):
    return {str(c.poly.monic()) for c in system}


def test_consistency_system_content():
    cons = az.generate_consistency_system()
    assert len(cons) == 14
    s = canon_set(cons)
    # linear block: coordinates of the Leibniz condition
    assert str((u("B4") - u("B6") - const(H)).monic()) in s
    assert str((u("B3") - u("B5")).monic()) in s
    assert str((u("A21") - const(1)).monic()) in s
    assert str((u("A12") - const(1)).monic()) in s
    # the quadratic coefficient conditions
    assert str((u("B3") * u("B6") - u("B2") * u("B7") - const(H) * u("B5")).monic()) in s


def test_consistency_deterministic():
    a = canon_set(az.generate_consistency_system())
    b = canon_set(az.generate_consistency_system())
    assert a == b


def test_forced_linear_gives_unit_A():
    subs, _ = az.reduce_by_forced_linear(az.generate_consistency_system())
    assert subs["A11"] == Scalar(1)
    assert subs["A12"] == Scalar(1)
    assert subs["A21"] == Scalar(1)


def test_span_containment():
    cons = az.generate_consistency_system()
    subs, reduced = az.reduce_by_forced_linear(cons)
    assert az.linear_span_contains(cons, u("B4") - u("B6") - const(H))
    assert az.linear_span_contains(cons, u("B3") - u("B5"))
    t = (u("B2") * (const(1) - u("A22"))).subs_partial(subs)
    assert az.linear_span_contains(reduced, t)
    # the mechanical sign: B5 + B8 = 0 is implied, B5 - B8 = 0 is not
    assert az.linear_span_contains(reduced, (u("B5") + u("B8")).subs_partial(subs))
    assert not az.linear_span_contains(reduced, (u("B5") - u("B8")).subs_partial(subs))


def test_solution_satisfies_full_system():
    full = az.generate_covariance_system(az.generate_consistency_system(),
                                         "derived")
    residuals, pinned = az.verify_solution(full, az.SOLUTION)
    assert residuals == []
    assert pinned == {"M11": E, "M22": Scalar(1), "M12": Scalar(0),
                      "M21": Scalar(0)}


def test_covariance_forces_structure():
    cov = az.generate_covariance_system([], "derived")
    s = canon_set(cov)
    assert str((u("A11") - const(1)).monic()) in s
    assert str(u("B2").monic()) in s
    # A22 = E * A21
    assert str((u("A22") - const(E) * u("A21")).monic()) in s


def test_negative_controls():
    full = az.generate_covariance_system(az.generate_consistency_system(),
                                         "derived")
    bad, _ = az.verify_solution(full, dict(az.SOLUTION, B1=H))
    assert bad
    # rejects A22 = 1 with B2 nonzero even though B2*(1 - A22) = 0 holds
    bad, _ = az.verify_solution(full, dict(az.SOLUTION, A22=Scalar(1),
                                           B2=Scalar(1)))
    assert bad


def test_classical_point():
    full = az.generate_covariance_system(az.generate_consistency_system(),
                                         "derived")
    residuals, _ = az.verify_solution(full, az.CLASSICAL, classical_limit=True)
    assert residuals == []


def test_missing_unknown():
    partial = dict(az.SOLUTION)
    del partial["B7"]
    with pytest.raises(az.MissingUnknown):
        az.verify_solution(az.generate_consistency_system(), partial)


def test_specialized_ansatz_reproduces_calculus_rules():
    assert az.specialized_rules_match_catalog() == []


def test_printed_coaction_variant_rejects_solution():
    cov = az.generate_covariance_system([], "printed")
    residuals, _ = az.verify_solution(cov, az.SOLUTION)
    assert residuals
