"""Mechanical re-derivation of the calculus coefficients.

The exchange ansatz writes every product (coordinate)*(differential) as

    X*dX = A11*dX*X + B1*dX + B2*dY        X*dY = A12*dY*X + B3*dX + B4*dY
    Y*dX = A21*dX*Y + B5*dX + B6*dY        Y*dY = A22*dY*Y + B7*dX + B8*dY

with twelve unknowns.  Consistency constraints come from applying the
differential to the defining commutator relation and from multiplying
the relation by dX and dY on the right; covariance constraints from
applying the left coaction to each ansatz relation and demanding the
image vanish in the tensor algebra.

Conjugating a differential by the inverse exponential symbol is not
polynomial in the unknowns, so the covariance pass introduces four
auxiliary shift unknowns

    eXi*dX = M11*dX*eXi + M21*dY*eXi      eXi*dY = M12*dX*eXi + M22*dY*eXi

which the system itself then pins (and which must agree with the
oracle-certified shift rules at the solution -- they do).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import TensorElement
from .engine import AlgElement, Presentation, RewriteRule, exterior_delta
from .presentations import catalog, _gens
from .scalars import Scalar

__all__ = ["UnknownScalar", "Constraint", "MissingUnknown",
           "UNKNOWNS", "SOLUTION", "CLASSICAL",
           "generate_consistency_system", "generate_covariance_system",
           "verify_solution", "specialized_rules_match_catalog",
           "linear_span_contains", "reduce_by_forced_linear"]

UNKNOWNS = ("A11", "A12", "A21", "A22",
            "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8",
            "M11", "M12", "M21", "M22")
_IDX = {n: i for i, n in enumerate(UNKNOWNS)}
_NU = len(UNKNOWNS)

_h = Scalar.monomial(h_exp=1)
_E = Scalar.monomial(e_exp=1)
_Ei = Scalar.monomial(e_exp=-1)
_one = Scalar(1)


class MissingUnknown(KeyError):
    pass


class UnknownScalar:
    """Sparse polynomial in the unknowns with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for m, c in (terms or {}).items():
            c = c if isinstance(c, Scalar) else Scalar(c)
            if not c.is_zero():
                self.terms[tuple(m)] = c

    @classmethod
    def _raw(cls, terms):
        u = object.__new__(cls)
        u.terms = terms
        return u

    @classmethod
    def var(cls, name):
        m = [0] * _NU
        try:
            m[_IDX[name]] = 1
        except KeyError:
            raise MissingUnknown(f"unknown symbol {name!r}") from None
        return cls({tuple(m): Scalar(1)})

    @classmethod
    def const(cls, c):
        return cls({(0,) * _NU: c})

    @staticmethod
    def _promote(x):
        if isinstance(x, UnknownScalar):
            return x
        if isinstance(x, (int, Scalar)) or type(x).__name__ == "Fraction":
            return UnknownScalar.const(x if isinstance(x, Scalar) else Scalar(x))
        return NotImplemented

    def __add__(self, other):
        other = UnknownScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return UnknownScalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UnknownScalar._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = UnknownScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = UnknownScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return UnknownScalar._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = UnknownScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def substitute(self, assignment):
        """Full substitution name->Scalar; every variable present must be
        assigned.  Returns a Scalar."""
        out = Scalar(0)
        for m, c in self.terms.items():
            acc = c
            for i, e in enumerate(m):
                if e:
                    name = UNKNOWNS[i]
                    if name not in assignment:
                        raise MissingUnknown(f"assignment lacks {name}")
                    acc = acc * assignment[name] ** e
            out = out + acc
        return out

    def subs_partial(self, assignment):
        out = UnknownScalar({})
        for m, c in self.terms.items():
            acc = UnknownScalar.const(c)
            for i, e in enumerate(m):
                if e:
                    name = UNKNOWNS[i]
                    if name in assignment:
                        acc = acc * UnknownScalar.const(assignment[name] ** e)
                    else:
                        mm = [0] * _NU
                        mm[i] = e
                        acc = acc * UnknownScalar({tuple(mm): Scalar(1)})
            out = out + acc
        return out

    def monic(self):
        if not self.terms:
            return self
        lead = max(self.terms, key=lambda m: (sum(m), m))
        lc = self.terms[lead]
        if lc.is_one():
            return self
        return UnknownScalar._raw({m: c / lc for m, c in self.terms.items()})

    def variables(self):
        out = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    out.add(UNKNOWNS[i])
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.terms[m]
            mono = "*".join(f"{UNKNOWNS[i]}" + ("" if e == 1 else f"^{e}")
                            for i, e in enumerate(m) if e)
            cs = str(c)
            if "/" in cs or " " in cs:
                cs = f"({cs})"
            bits.append(f"{cs}*{mono}" if mono and not c.is_one()
                        else (mono or cs))
        return " + ".join(bits)

    __repr__ = __str__


def _u(name):
    return UnknownScalar.var(name)


@dataclass
class Constraint:
    poly: UnknownScalar
    tag: str

    def __str__(self):
        return f"{self.poly} = 0    [{self.tag}]"


# ---------------------------------------------------------------------------
# the symbolic presentations
# ---------------------------------------------------------------------------

def _ansatz_rules():
    return [
        RewriteRule(("X", "Y"), {("Y", "X"): _one, ("Y",): _h}),
        RewriteRule(("X", "dX"), {("dX", "X"): _u("A11"), ("dX",): _u("B1"),
                                  ("dY",): _u("B2")}),
        RewriteRule(("X", "dY"), {("dY", "X"): _u("A12"), ("dX",): _u("B3"),
                                  ("dY",): _u("B4")}),
        RewriteRule(("Y", "dX"), {("dX", "Y"): _u("A21"), ("dX",): _u("B5"),
                                  ("dY",): _u("B6")}),
        RewriteRule(("Y", "dY"), {("dY", "Y"): _u("A22"), ("dX",): _u("B7"),
                                  ("dY",): _u("B8")}),
    ]


def _ansatz_presentation():
    return Presentation(
        "ANSATZ", _gens(("dX", 1), ("dY", 1), ("Y", 0), ("X", 0)),
        _ansatz_rules(), max_check_degree=4)


def _ansatz_ext_presentation():
    return Presentation(
        "ANSATZ_EXT", _gens(("dX", 1), ("dY", 1), ("Y", 0), ("X", 0), ("eXi", 0)),
        _ansatz_rules() + [
            RewriteRule(("eXi", "X"), {("X", "eXi"): _one}),
            RewriteRule(("eXi", "Y"), {("Y", "eXi"): _Ei}),
            RewriteRule(("eXi", "dX"), {("dX", "eXi"): _u("M11"),
                                        ("dY", "eXi"): _u("M21")}),
            RewriteRule(("eXi", "dY"), {("dX", "eXi"): _u("M12"),
                                        ("dY", "eXi"): _u("M22")}),
        ], max_check_degree=4)


def _collect(e, tag, out):
    for w, c in e.terms.items():
        if isinstance(c, Scalar):
            c = UnknownScalar.const(c)
        out.append(Constraint(c, f"{tag} @ {'*'.join(w) or '1'}"))


def generate_consistency_system():
    """Constraints from d(relation) = 0 and relation*dX = 0, relation*dY = 0.

    The relation is kept as raw words (it normalizes to zero, that is the
    point); the Leibniz expansion and the right-multiplied products are
    then reduced by pushing differentials left first (rightmost redex
    first) and reordering coordinate words afterwards, so each basis
    word's coefficient is one constraint.
    """
    p = _ansatz_presentation()
    rel_raw = {("X", "Y"): _one, ("Y", "X"): -_one, ("Y",): -_h}
    out = []
    # termwise Leibniz on the raw words
    d_terms = {}
    images = {"X": ("dX",), "Y": ("dY",)}
    for w, c in rel_raw.items():
        for i, g in enumerate(w):
            ww = w[:i] + images[g] + w[i + 1:]
            d_terms[ww] = d_terms.get(ww, Scalar(0)) + c
    d_rel = p.normalize(AlgElement(p, d_terms), rightmost=True)
    _collect(d_rel, "d(rel)", out)
    for d in ("dX", "dY"):
        prod = {w + (d,): c for w, c in rel_raw.items()}
        e = p.normalize(AlgElement(p, prod), rightmost=True)
        _collect(e, f"rel*{d}", out)
    return out


def _phi_L(p, variant):
    c = (_one - _E) / _h
    second = ("dX", "eXi") if variant == "derived" else ("X", "eXi")
    return {
        "dX": TensorElement(p, 2, {((), ("dX",)): _one}),
        "dY": TensorElement(p, 2, {((), ("dY",)): UnknownScalar.const(_one),
                                   (("Y",), second): UnknownScalar.const(c)}),
    }


def _delta_word(p, w):
    """Coproduct of an even word over {X, Y} in the symbolic tensor algebra."""
    imgs = {
        "X": TensorElement(p, 2, {(("X",), ()): _one, ((), ("X",)): _one}),
        "Y": TensorElement(p, 2, {(("Y",), ("eXi",)): _one, ((), ("Y",)): _one}),
    }
    out = TensorElement.unit(p)
    for g in w:
        out = out * imgs[g]
    return out


def generate_covariance_system(base=None, variant="derived"):
    """Apply the left coaction to each ansatz relation, demand the image
    vanish in the tensor algebra, and append the constraints to ``base``."""
    p = _ansatz_ext_presentation()
    phi = _phi_L(p, variant)
    out = list(base) if base else []
    for r in _ansatz_rules()[1:]:  # the four exchange rules
        a, d = r.lhs  # coordinate letter, differential letter
        lhs_t = _delta_word(p, (a,)) * phi[d]
        rhs_t = TensorElement(p, 2, {})
        for w, c in r.rhs.items():
            if len(w) == 1:
                t = phi[w[0]].scaled(c)
            else:
                t = (phi[w[0]] * _delta_word(p, w[1:])).scaled(c)
            rhs_t = rhs_t + t
        diff = (lhs_t - rhs_t).slotwise_normal()
        for (u, v), c in diff.terms.items():
            if isinstance(c, Scalar):
                c = UnknownScalar.const(c)
            out.append(Constraint(
                c, f"DeltaL[{variant}]({a}*{d}-rule) @ "
                   f"{'*'.join(u) or '1'} (x) {'*'.join(v) or '1'}"))
    return out


# ---------------------------------------------------------------------------
# solving / verification helpers
# ---------------------------------------------------------------------------

SOLUTION = {
    "A11": _one, "A12": _one, "A21": _one, "A22": _E,
    "B1": -_h, "B2": Scalar(0), "B3": Scalar(0), "B4": Scalar(0),
    "B5": Scalar(0), "B6": -_h, "B7": Scalar(0), "B8": Scalar(0),
}

CLASSICAL = {
    "A11": _one, "A12": _one, "A21": _one, "A22": _one,
    **{f"B{i}": Scalar(0) for i in range(1, 9)},
}


def _pin_shift_unknowns(system, assignment):
    """After substituting the twelve structure unknowns the shift unknowns
    appear linearly; solve for them, checking consistency."""
    pinned = {}
    pending = []
    for c in system:
        q = c.poly.subs_partial(assignment)
        if q.is_zero():
            continue
        vs = q.variables()
        if not vs:
            pending.append(c)  # unsatisfiable regardless of the shifts
            continue
        pending.append(c)
    # iterate: pick constraints with a single linear shift unknown
    changed = True
    while changed:
        changed = False
        for c in list(pending):
            q = c.poly.subs_partial(assignment).subs_partial(pinned)
            if q.is_zero():
                pending.remove(c)
                continue
            vs = sorted(q.variables())
            if len(vs) == 1:
                v = vs[0]
                mono = [0] * _NU
                mono[_IDX[v]] = 1
                lin = q.terms.get(tuple(mono))
                const = q.terms.get((0,) * _NU, Scalar(0))
                if lin is not None and len(q.terms) <= 2 and not lin.is_zero():
                    pinned[v] = -const / lin
                    pending.remove(c)
                    changed = True
    return pinned, pending


def verify_solution(system, assignment, classical_limit=False):
    """Substitute and report every nonzero residual; pass iff all vanish.

    The assignment covers the twelve structure unknowns; the four shift
    unknowns are pinned by the system itself first.  With
    ``classical_limit`` residuals are evaluated at h = 0 (constant series
    term) instead of exactly.
    """
    for name in UNKNOWNS[:12]:
        if name not in assignment:
            raise MissingUnknown(f"assignment lacks {name}")
    pinned, _ = _pin_shift_unknowns(system, assignment)
    full = dict(assignment)
    full.update(pinned)
    for name in UNKNOWNS[12:]:
        full.setdefault(name, _one if name in ("M11", "M22") else Scalar(0))
    residuals = []
    for c in system:
        r = c.poly.substitute(full)
        if classical_limit:
            if r.to_series(0).is_zero():
                continue
            residuals.append((c, r))
        elif not r.is_zero():
            residuals.append((c, r))
    return residuals, pinned


def specialized_rules_match_catalog(assignment=None):
    """The ansatz specialized at the solution must reproduce the calculus
    exchange rules (and the pinned shifts the certified conjugation rules)."""
    assignment = assignment or SOLUTION
    gamma = catalog().presentation("GAMMA")
    by_lhs = {r.lhs: r for r in gamma.rules}
    mismatches = []
    for r in _ansatz_rules()[1:]:
        want = by_lhs[r.lhs]
        got = {}
        for w, c in r.rhs.items():
            cv = c.substitute(assignment) if isinstance(c, UnknownScalar) else c
            if not cv.is_zero():
                got[w] = cv
        if got != dict(want.rhs):
            mismatches.append((r.lhs, got, dict(want.rhs)))
    return mismatches


# -- linear-consequence checking ------------------------------------------------

def linear_span_contains(system, target):
    """Is ``target`` a Q(h,E)-linear combination of the system polynomials?"""
    rows = [dict(c.poly.terms) for c in system if not c.poly.is_zero()]
    basis = []  # list of (pivot_monomial, row)
    def reduce(row):
        row = dict(row)
        for piv, b in basis:
            if piv in row:
                f = row[piv] / b[piv]
                for m, c in b.items():
                    s = row.get(m, Scalar(0)) - f * c
                    if s.is_zero():
                        row.pop(m, None)
                    else:
                        row[m] = s
        return row
    for row in rows:
        row = reduce(row)
        if row:
            piv = max(row, key=lambda m: (sum(m), m))
            basis.append((piv, row))
    return not reduce(dict(target.terms))


def reduce_by_forced_linear(system):
    """Repeatedly substitute unknowns pinned by constraints of the shape
    c*(v - value); returns (substitution, reduced canonical system)."""
    subs = {}
    polys = [c.poly for c in system]
    changed = True
    while changed:
        changed = False
        for q in polys:
            q = q.subs_partial(subs).monic()
            if q.is_zero():
                continue
            vs = sorted(q.variables())
            if len(q.terms) <= 2 and len(vs) == 1:
                v = vs[0]
                mono = [0] * _NU
                mono[_IDX[v]] = 1
                lin = q.terms.get(tuple(mono))
                const = q.terms.get((0,) * _NU, Scalar(0))
                if lin is not None and v not in subs:
                    subs[v] = -const / lin
                    changed = True
    reduced = []
    seen = set()
    for c in system:
        q = c.poly.subs_partial(subs).monic()
        if q.is_zero():
            continue
        key = tuple(sorted((m, str(v)) for m, v in q.terms.items()))
        if key not in seen:
            seen.add(key)
            reduced.append(Constraint(q, c.tag))
    return subs, reduced
