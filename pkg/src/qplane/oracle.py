"""Independent brute-force validation by truncated exponential expansion.

The engine treats exponential symbols as opaque invertible generators with
derived commutation rules.  This module certifies those rules without
them: it expands every exponential as a finite Taylor sum, reduces with
primary-provenance rules only, and checks that the residual vanishes
grade by grade up to a cutoff.

All arithmetic here is exact; truncation happens only in the exponential
sums and in the final comparison.  Gradings assign every generator an
integer weight and h weight one, so a coefficient's admissible order is
``cutoff - grade(word)``.  Expansions carry ``margin`` extra terms because
some reductions (those with an affine constant) can lower the grade.
"""

from __future__ import annotations

from fractions import Fraction

from .engine import AlgElement, Presentation, exterior_delta
from .scalars import Scalar

__all__ = [
    "expand_exponential", "series_vanishes", "grade_of",
    "verify_quantum_plane", "validate_rule_by_expansion", "verify_T_to_HN",
]

DEFAULT_CUTOFF = 6
MARGIN = 2


def expand_exponential(p, letter, sign=1, cutoff=DEFAULT_CUTOFF, scale=None):
    """Sum_{k<=cutoff} (sign*scale*letter)^k / k! as an exact element of p.

    ``scale`` multiplies the exponent (h for group-likes of the form
    exp(h*letter)); default 1.
    """
    coeff = Scalar(sign) if scale is None else Scalar(sign) * scale
    terms = {}
    c = Scalar(1)
    for k in range(cutoff + 1):
        if k:
            c = c * coeff / k
        terms[(letter,) * k] = c
    return p.el(terms)


def grade_of(word, grading):
    return sum(grading.get(g, 0) for g in word)


def series_vanishes(e, grading, cutoff):
    """True iff every word of grade <= cutoff has a coefficient whose
    h-series vanishes through order cutoff - grade.  Returns (ok, witness)."""
    for w, c in e.terms.items():
        g = grade_of(w, grading)
        if g > cutoff:
            continue
        s = c.to_series(cutoff - g)
        if not s.is_zero():
            return False, f"{'*'.join(w) or '1'}: {c} ~ {s}"
    return True, ""


def check_identity(lhs, rhs, grading, cutoff):
    """Normalize both sides' difference and check gradewise vanishing."""
    p = lhs.p
    diff = p.normalize(lhs - rhs)
    return series_vanishes(diff, grading, cutoff)


# ---------------------------------------------------------------------------
# suite checks
# ---------------------------------------------------------------------------

def verify_quantum_plane(cutoff=8, corrupt=False):
    """Expand x = exp(X), y = x*Y and test x*y - E*y*x gradewise.

    With ``corrupt`` the defining commutator is replaced by [X, Y] = h*X,
    a negative control that must fail at grade 2.
    """
    from .presentations import catalog
    cat = catalog()
    p = cat.presentation("ORACLE_XY")
    if corrupt:
        from .engine import GeneratorSym, RewriteRule
        p = Presentation("ORACLE_XY_BAD", p.gens, [
            RewriteRule(("X", "Y"), {("Y", "X"): Scalar(1),
                                     ("X",): Scalar.monomial(h_exp=1)},
                        provenance="PAPER", note="negative control")])
    grading = {"X": 1, "Y": 0}
    x = expand_exponential(p, "X", +1, cutoff + MARGIN)
    y = p.mul(x, p.gen("Y"))
    lhs = p.mul(x, y)
    rhs = p.mul(y, x).scaled(Scalar.monomial(e_exp=1))
    return check_identity(lhs, rhs, grading, cutoff)


def validate_rule_by_expansion(rule, images, oracle_p, grading, cutoff=DEFAULT_CUTOFF):
    """Check an oriented rule by mapping every symbol through ``images`` into
    an oracle presentation carrying only primary-provenance rules.

    ``images``: name -> AlgElement of oracle_p.  Both sides are expanded,
    multiplied out, normalized, and compared gradewise through the cutoff.
    """
    def side(words):
        out = oracle_p.zero()
        for w, c in words.items():
            acc = oracle_p.constant(c)
            for g in w:
                acc = oracle_p.mul(acc, images[g])
            out = out + acc
        return out

    lhs = side({rule.lhs: Scalar(1)})
    rhs = side(rule.rhs)
    return check_identity(lhs, rhs, grading, cutoff)


def validate_delta_image(letter_sign, image_rhs, oracle_p, cutoff=DEFAULT_CUTOFF):
    """Certify the differential of exp(letter_sign * X) against ``image_rhs``.

    The left side applies the Leibniz rule term by term to the truncated
    exponential inside the differential-calculus presentation restricted to
    primary rules; the right side expands the exponential in ``image_rhs``
    (a map word->Scalar over letters dX and eX/eXi placeholders).
    """
    p = oracle_p
    grading = {"X": 1, "dX": 1, "Y": 0, "dY": 0}
    exp_el = expand_exponential(p, "X", letter_sign, cutoff + MARGIN)
    lhs = exterior_delta(exp_el, {"X": p.gen("dX"), "Y": p.gen("dY"),
                                  "dX": p.zero(), "dY": p.zero()})
    rhs = p.zero()
    for w, c in image_rhs.items():
        acc = p.constant(c)
        for g in w:
            acc = p.mul(acc, exp_el if g in ("eX", "eXi") else p.gen(g))
        rhs = rhs + acc
    return check_identity(lhs, rhs, grading, cutoff)


def verify_T_to_HN(cutoff=4, perturb=None):
    """The operator substitution T1 = (exp(-h N) - 1)/(exp(-h) - 1),
    T2 = exp(-h N) H must reproduce the vector-field exchange relation.

    Exact and truncated variants.  ``perturb`` selects a corrupted
    substitution for falsifiability:

    * ``"t1-norm"`` -- flip the sign of h in T1's normalizing denominator
      (must fail);
    * ``"t2-sign"`` -- flip the exponent sign in T2.  This one turns out
      to PASS: g*H satisfies the exchange relation for every group-like
      g = exp(a*h*N), so the exponent sign in T2 is not observable there.

    Returns dict of named (ok, witness) pairs.
    """
    from .presentations import catalog
    cat = catalog()
    hn = cat.presentation("HN")
    h = Scalar.monomial(h_exp=1)
    E, Ei = Scalar.monomial(e_exp=1), Scalar.monomial(e_exp=-1)

    out = {}

    # exact check with the opaque invertible symbol Ki = exp(-h N)
    t1 = (hn.gen("Ki") - hn.one()).scaled((Ei - 1).inverse())
    t2 = hn.mul(hn.gen("Ki"), hn.gen("H"))
    res = hn.normalize(hn.mul(t2, t1) - hn.mul(t1, t2).scaled(Ei) - t2)
    out["exact"] = (res.is_zero(), "" if res.is_zero() else str(res))

    # truncated check in the primary-rule presentation {H, N}
    p0 = cat.presentation("ORACLE_HN")
    grading = {"H": 0, "N": 0}
    kexp = expand_exponential(p0, "N", -1, cutoff + MARGIN, scale=h)
    denom = (E - 1) if perturb == "t1-norm" else (Ei - 1)
    t1s = (kexp - p0.one()).scaled(denom.inverse())
    sign = +1 if perturb == "t2-sign" else -1
    t2s = p0.mul(expand_exponential(p0, "N", sign, cutoff + MARGIN, scale=h),
                 p0.gen("H"))
    lhs = p0.mul(t2s, t1s)
    rhs = p0.mul(t1s, t2s).scaled(Ei) + t2s
    out["series"] = check_identity(lhs, rhs, grading, cutoff)
    return out
