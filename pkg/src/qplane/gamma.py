"""Graded Hopf structure of the differential algebra on the deformed plane.

The differential algebra is the presentation GAMMA.  Its coproduct on the
even part is the one of the underlying deformed Lie algebra; on the two
differentials it is the sum of the left and right coactions, embedded in
the tensor square.  The counit kills differentials; the coinverse extends
anti-multiplicatively with the graded sign.

Two coinverse tables for dY are carried:

* ``stated``  -- exp(X-h)*(dY + (E-1)/h*dX*Y), the published value;
* ``axiom``   -- its negative, the unique convolution inverse.

The sign experiment compares the composite of the coinverse with the
exterior differential against +/- the differential of the coinverse, per
generator, and reports which convention each table entry realizes.
"""

from __future__ import annotations

from .coalgebra import HopfTables, TensorElement, antipode, coproduct, counit
from .covariance import CoactionTables, delta_L, delta_R
from .engine import exterior_delta
from .presentations import catalog
from .scalars import Scalar

__all__ = ["differential", "hat_tables", "consistency_of_calculus",
           "kappa_hat_stated", "sign_experiment", "run_graded_suite"]

_h = Scalar.monomial(h_exp=1)
_E = Scalar.monomial(e_exp=1)
_Ei = Scalar.monomial(e_exp=-1)
_one = Scalar(1)


def differential(e):
    """Exterior differential on GAMMA elements (graded Leibniz; the images
    of the exponential symbols are the oracle-certified ones)."""
    return exterior_delta(e, catalog().gamma_delta_images)


def kappa_hat_stated():
    p = catalog().presentation("GAMMA")
    return p.el({("eX", "dY"): _Ei, ("eX", "dX", "Y"): _Ei * (_E - _one) / _h})


def hat_tables(kappa_variant="axiom", phi_variant="derived"):
    """Structure tables for the full differential algebra.

    The coproduct images of dX, dY are the sums of the left and right
    coaction images; extension to words is multiplicative with Koszul
    signs, matching the one-differential bimodule formula and the
    factor-wise rule on products of differentials.
    """
    cat = catalog()
    p = cat.presentation("GAMMA")
    even = cat.hopf_tables("GAMMA_EVEN")
    co = CoactionTables(phi_variant)

    def embed_L(t):  # g (x) Gamma into Gamma (x) Gamma (same presentation)
        return t

    delta = dict(even.delta)
    for d in ("dX", "dY"):
        delta[d] = co.phiL[d] + co.phiR[d]
    eps = dict(even.eps)
    eps.update({"dX": Scalar(0), "dY": Scalar(0)})
    kappa = dict(even.kappa)
    kappa["dX"] = p.el({("dX",): -_one})
    stated = kappa_hat_stated()
    kappa["dY"] = stated if kappa_variant == "stated" else -stated
    return HopfTables(p, delta, eps, kappa,
                      sample_alphabet=("dX", "dY", "Y", "X"),
                      name=f"GAMMA({kappa_variant})")


def consistency_of_calculus():
    """d applied to the defining commutator relation must vanish once the
    calculus exchange rules are used."""
    p = catalog().presentation("GAMMA")
    rel = (p.mul(p.gen("X"), p.gen("Y")) - p.mul(p.gen("Y"), p.gen("X"))
           - p.gen("Y").scaled(_h))
    res = differential(rel)
    return res.is_zero(), "" if res.is_zero() else str(res)


def sign_experiment():
    """Compare the stated coinverse images of dX, dY against +/- the
    differential of the coinverse of X, Y.  Returns records plus a verdict."""
    cat = catalog()
    p = cat.presentation("GAMMA")
    even = cat.hopf_tables("GAMMA_EVEN")
    stated = {"dX": p.el({("dX",): -_one}), "dY": kappa_hat_stated()}
    records = []
    signs = {}
    for a, d in (("X", "dX"), ("Y", "dY")):
        dk = differential(antipode(p.gen(a), even))
        khat = p.normalize(stated[d])
        plus = dk == khat
        minus = dk == -khat
        signs[a] = "+" if plus else ("-" if minus else "neither")
        records.append((f"gamma.sign.{a}", plus or minus,
                        f"stated table realizes kappa_hat(d{a}) = "
                        f"{signs[a]}d(kappa({a}))"))
    verdict = (
        f"stated dX entry matches the '+' convention, stated dY entry matches "
        f"the '{signs['Y']}' convention; no uniform sign fits both stated "
        f"entries; negating the stated dY entry realizes the uniform '+' "
        f"convention and is the unique convolution inverse"
        if signs["X"] == "+" and signs["Y"] == "-" else
        f"per-generator signs: X: {signs['X']}, Y: {signs['Y']}")
    return records, verdict, signs


def run_graded_suite(samples=6, seed=0):
    """All graded-structure checks: counit values, invariance of the
    calculus relations under the three structure maps, graded counit and
    coinverse laws, and the sign experiment.  Returns (records, findings)."""
    cat = catalog()
    p = cat.presentation("GAMMA")
    records = []
    findings = []

    t_axiom = hat_tables("axiom")
    t_stated = hat_tables("stated")

    # counit values on the differentials
    for d in ("dX", "dY"):
        v = counit(p.gen(d), t_axiom)
        records.append((f"gamma.eps-hat.{d}", v.is_zero(), str(v)))

    # consistency derivation
    ok, witness = consistency_of_calculus()
    records.append(("gamma.consistency-derivation", ok, witness))

    # relation invariance under all three maps, both coinverse tables
    from .engine import AlgElement
    paper_rules = [r for r in p.rules if r.provenance == "PAPER"
                   and r.lhs not in ((("eX", "eXi")), (("eXi", "eX")))]
    for i, r in enumerate(p.rules):
        rel = p.el({r.lhs: _one}) - AlgElement(p, dict(r.rhs))
        dd = coproduct(rel, t_axiom)
        records.append((f"gamma.delta-hat-invariance.rule{i}", dd.is_zero(),
                        "" if dd.is_zero() else f"{'*'.join(r.lhs)}: {dd}"))
        ee = counit(rel, t_axiom)
        records.append((f"gamma.eps-hat-invariance.rule{i}", ee.is_zero(), str(ee)))
        for tag, t in (("axiom", t_axiom), ("stated", t_stated)):
            kk = antipode(rel, t)
            rec = (f"gamma.kappa-hat-invariance[{tag}].rule{i}",
                   kk.is_zero(), "" if kk.is_zero() else str(kk))
            # the stated dY entry breaks invariance of the [Y,dX] exchange
            # rule; that comparison is part of the sign finding
            (records if tag == "axiom" else findings).append(rec)

    # graded counit and coinverse laws on the differentials
    def one_word(w):
        return p.el({w: 1})

    for d in ("dX", "dY"):
        e = p.gen(d)
        dd = coproduct(e, t_axiom)
        left = _conv(dd, lambda u: p.constant(t_axiom.counit_word(u)), one_word, p)
        right = _conv(dd, one_word, lambda v: p.constant(t_axiom.counit_word(v)), p)
        records.append((f"gamma.counit-left.{d}", left == e, str(left)))
        records.append((f"gamma.counit-right.{d}", right == e, str(right)))
        for tag, t in (("axiom", t_axiom), ("stated", t_stated)):
            la = _conv(dd, t.antipode_word, one_word, p)
            ra = _conv(dd, one_word, t.antipode_word, p)
            ok = la.is_zero() and ra.is_zero()
            rec = (f"gamma.antipode-laws[{tag}].{d}", ok,
                   "" if ok else f"m(kappa_hat (x) id)Delta_hat = {la}")
            if tag == "stated":
                # expected to fail on dY: reported as a finding, not a failure
                findings.append(rec)
            else:
                records.append(rec)

    sign_records, verdict, signs = sign_experiment()
    records.extend(sign_records)
    findings.append(("gamma.sign-experiment", True, verdict))
    return records, findings


def _conv(tensor, f_left, f_right, p):
    out = p.zero()
    for (u, v), c in tensor.terms.items():
        out = out + p.mul(f_left(u), f_right(v)).scaled(c)
    return p.normalize(out)
