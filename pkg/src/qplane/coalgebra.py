"""Graded tensor algebra and Hopf structure maps.

Tensor elements are finite combinations of word tuples with multiplication
obeying the Koszul rule: moving an odd factor past an odd factor costs a
sign, (a (x) b)(c (x) d) = (-1)^{|b||c|} (ac (x) bd), and the obvious
generalisation in three slots.  Every slot is normalized in the ambient
presentation.

Coproduct and counit extend multiplicatively from generator tables;
the antipode extends anti-multiplicatively with the graded sign
kappa(uv) = (-1)^{|u||v|} kappa(v) kappa(u).
"""

from __future__ import annotations

import itertools

from .engine import AlgElement
from .scalars import Scalar

__all__ = ["TensorElement", "HopfTables", "IncompleteTable",
           "coproduct", "counit", "antipode", "check_hopf_axioms"]


class IncompleteTable(KeyError):
    """A generator has no image in the structure table."""


def _coeff(c):
    if isinstance(c, Scalar) or hasattr(c, "is_zero"):
        return c if not isinstance(c, int) else Scalar(c)
    return Scalar(c)


class TensorElement:
    """map (word, ..., word) -> coefficient over a fixed presentation."""

    __slots__ = ("p", "arity", "terms")

    def __init__(self, p, arity, terms):
        self.p = p
        self.arity = arity
        out = {}
        for ws, c in terms.items():
            c = _coeff(c)
            if not c.is_zero():
                ws = tuple(tuple(w) for w in ws)
                assert len(ws) == arity
                out[ws] = c
        self.terms = out

    @classmethod
    def _raw(cls, p, arity, terms):
        t = object.__new__(cls)
        t.p, t.arity, t.terms = p, arity, terms
        return t

    @classmethod
    def unit(cls, p, arity=2):
        return cls(p, arity, {((),) * arity: Scalar(1)})

    @classmethod
    def of(cls, *elements):
        """Plain tensor product of AlgElements (no signs: pure juxtaposition)."""
        p = elements[0].p
        terms = {}
        for combo in itertools.product(*(list(e.terms.items()) for e in elements)):
            ws = tuple(w for w, _ in combo)
            c = Scalar(1)
            for _, ci in combo:
                c = c * ci
            prev = terms.get(ws)
            s = c if prev is None else prev + c
            if s.is_zero():
                terms.pop(ws, None)
            else:
                terms[ws] = s
        return cls(p, len(elements), terms)

    def _check(self, other):
        if self.p is not other.p or self.arity != other.arity:
            raise ValueError("tensor shape mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for ws, c in other.terms.items():
            s = out.get(ws)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(ws, None)
            else:
                out[ws] = s
        return TensorElement._raw(self.p, self.arity, out)

    def __neg__(self):
        return TensorElement._raw(self.p, self.arity,
                                  {ws: -c for ws, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = _coeff(c)
        out = {}
        for ws, v in self.terms.items():
            s = c * v
            if not s.is_zero():
                out[ws] = s
        return TensorElement._raw(self.p, self.arity, out)

    def __rmul__(self, c):
        return self.scaled(c)

    def __mul__(self, other):
        """Koszul-signed slotwise product, each slot normalized."""
        if not isinstance(other, TensorElement):
            return self.scaled(other)
        self._check(other)
        p = self.p
        par = p.parity
        raw = {}
        for ws1, c1 in self.terms.items():
            p1 = [par(w) for w in ws1]
            for ws2, c2 in other.terms.items():
                # sign: each ws2 slot word moves left past the later ws1 slots
                s = 0
                for j, w2 in enumerate(ws2[:-1]):
                    if par(w2):
                        s += sum(p1[j + 1:])
                c = c1 * c2 if s % 2 == 0 else -(c1 * c2)
                ws = tuple(w1 + w2 for w1, w2 in zip(ws1, ws2))
                prev = raw.get(ws)
                sv = c if prev is None else prev + c
                if sv.is_zero():
                    raw.pop(ws, None)
                else:
                    raw[ws] = sv
        return TensorElement._raw(p, self.arity, raw).slotwise_normal()

    def slotwise_normal(self):
        out = {}
        p = self.p
        for ws, c in self.terms.items():
            normals = [p.normalize(AlgElement(p, {w: Scalar(1)})) for w in ws]
            for combo in itertools.product(*(list(n.terms.items()) for n in normals)):
                nws = tuple(w for w, _ in combo)
                cc = c
                for _, ci in combo:
                    cc = cc * ci
                prev = out.get(nws)
                s = cc if prev is None else prev + cc
                if s.is_zero():
                    out.pop(nws, None)
                else:
                    out[nws] = s
        return TensorElement._raw(self.p, self.arity, out)

    def map_slot(self, i, f):
        """Apply a linear word->AlgElement map to slot i (an even map)."""
        out = TensorElement._raw(self.p, self.arity, {})
        acc = {}
        for ws, c in self.terms.items():
            img = f(ws[i])
            for w, ci in img.terms.items():
                nws = ws[:i] + (w,) + ws[i + 1:]
                cc = c * ci
                prev = acc.get(nws)
                s = cc if prev is None else prev + cc
                if s.is_zero():
                    acc.pop(nws, None)
                else:
                    acc[nws] = s
        return TensorElement._raw(self.p, self.arity, acc)

    def expand_slot(self, i, f):
        """Replace slot i by the image of a word->TensorElement map (even map)."""
        acc = {}
        arity_out = None
        for ws, c in self.terms.items():
            img = f(ws[i])
            arity_out = self.arity - 1 + img.arity
            for sub, ci in img.terms.items():
                nws = ws[:i] + sub + ws[i + 1:]
                cc = c * ci
                prev = acc.get(nws)
                s = cc if prev is None else prev + cc
                if s.is_zero():
                    acc.pop(nws, None)
                else:
                    acc[nws] = s
        if arity_out is None:
            arity_out = self.arity + 1
        return TensorElement._raw(self.p, arity_out, acc)

    def collapse(self, f):
        """Sum of f(slot words) -> AlgElement via multiplication in order."""
        p = self.p
        out = p.zero()
        for ws, c in self.terms.items():
            acc = p.constant(c)
            for w in ws:
                acc = p.mul(acc, f(w))
            out = out + acc
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.p is other.p and self.arity == other.arity
                and self.terms == other.terms)

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __str__(self):
        from .parser import fmt
        return fmt(self)

    def __repr__(self):
        return f"<tensor^{self.arity}: {self}>"


class HopfTables:
    """Per-generator coproduct, counit and antipode images.

    delta maps names to 2-slot TensorElements, eps to scalars, kappa to
    AlgElements.  Delta and eps extend as algebra maps, kappa as a graded
    anti-map.  ``sample_alphabet`` bounds randomized axiom checks.
    """

    def __init__(self, p, delta, eps, kappa, sample_alphabet=None, name=""):
        self.p = p
        self.delta = delta
        self.eps = eps
        self.kappa = kappa
        self.sample_alphabet = tuple(sample_alphabet or delta.keys())
        self.name = name or p.name

    def _img(self, table, g):
        try:
            return table[g]
        except KeyError:
            raise IncompleteTable(f"no structure image for generator {g!r}") from None

    def coproduct_word(self, w):
        out = TensorElement.unit(self.p)
        for g in w:
            out = out * self._img(self.delta, g)
        return out

    def counit_word(self, w):
        c = Scalar(1)
        for g in w:
            c = c * self._img(self.eps, g)
            if c.is_zero():
                break
        return c

    def antipode_word(self, w):
        par = [self.p._parity[g] for g in w]
        odd = sum(par)
        sign = -1 if (odd * (odd - 1) // 2) % 2 else 1
        out = self.p.constant(sign)
        for g in reversed(w):
            out = self.p.mul(out, self._img(self.kappa, g))
        return out


def coproduct(e, t):
    out = TensorElement(t.p, 2, {})
    for w, c in e.terms.items():
        out = out + t.coproduct_word(w).scaled(c)
    return out.slotwise_normal()


def counit(e, t):
    c = Scalar(0)
    for w, cw in e.terms.items():
        c = c + cw * t.counit_word(w)
    return c


def antipode(e, t):
    out = t.p.zero()
    for w, c in e.terms.items():
        out = out + t.antipode_word(w).scaled(c)
    return t.p.normalize(out)


def _convolve(tensor, f_left, f_right, p):
    """m o (f_left (x) f_right) applied to a 2-slot tensor, normalized."""
    out = p.zero()
    for (u, v), c in tensor.terms.items():
        out = out + p.mul(f_left(u), f_right(v)).scaled(c)
    return p.normalize(out)


def check_hopf_axioms(tables, samples=10, seed=0, rules=None):
    """Coassociativity, both counit and antipode laws, and ideal invariance.

    Runs on every generator of the table and on ``samples`` seeded random
    normalized elements of degree <= 3, and checks that the coproduct and
    counit annihilate every defining rule of the presentation (restricted
    to ``rules`` when given).  Returns a list of (check_id, ok, detail).
    """
    import random
    p = tables.p
    results = []
    rng = random.Random(seed)

    def one_word(w):
        return p.el({w: 1})

    def run(tag, e):
        d = coproduct(e, tables)
        # coassociativity
        lhs = d.expand_slot(0, tables.coproduct_word).slotwise_normal()
        rhs = d.expand_slot(1, tables.coproduct_word).slotwise_normal()
        results.append((f"{tables.name}.coassoc.{tag}", lhs == rhs,
                        "" if lhs == rhs else f"{lhs} != {rhs}"))
        # counit laws
        left = _convolve(d, lambda u: p.constant(tables.counit_word(u)), one_word, p)
        right = _convolve(d, one_word, lambda v: p.constant(tables.counit_word(v)), p)
        en = p.normalize(e)
        results.append((f"{tables.name}.counit-left.{tag}", left == en,
                        "" if left == en else str(left - en)))
        results.append((f"{tables.name}.counit-right.{tag}", right == en,
                        "" if right == en else str(right - en)))
        # antipode laws
        eps_e = counit(e, tables)
        target = p.constant(eps_e)
        lhs_a = _convolve(d, tables.antipode_word, one_word, p)
        rhs_a = _convolve(d, one_word, tables.antipode_word, p)
        results.append((f"{tables.name}.antipode-left.{tag}", lhs_a == target,
                        "" if lhs_a == target else str(lhs_a - target)))
        results.append((f"{tables.name}.antipode-right.{tag}", rhs_a == target,
                        "" if rhs_a == target else str(rhs_a - target)))

    for g in tables.sample_alphabet:
        run(g, p.gen(g))
    for k in range(samples):
        e = p.random_element(rng, max_len=3, alphabet=tables.sample_alphabet)
        run(f"sample{k}", e)

    # structure maps must annihilate the defining relations
    for i, r in enumerate(rules if rules is not None else p.rules):
        rel = p.el({r.lhs: 1}) - AlgElement(p, dict(r.rhs))
        dd = coproduct(rel, tables)
        results.append((f"{tables.name}.delta-respects-rule{i}", dd.is_zero(),
                        "" if dd.is_zero() else f"{'*'.join(r.lhs)}: {dd}"))
        ee = counit(rel, tables)
        results.append((f"{tables.name}.counit-respects-rule{i}", ee.is_zero(),
                        "" if ee.is_zero() else str(ee)))
        kk = antipode(rel, tables)
        results.append((f"{tables.name}.antipode-respects-rule{i}", kk.is_zero(),
                        "" if kk.is_zero() else str(kk)))

    # eps o kappa = eps and kappa(1) = 1 on generators
    for g in tables.sample_alphabet:
        ok = counit(antipode(p.gen(g), tables), tables) == counit(p.gen(g), tables)
        results.append((f"{tables.name}.eps-kappa.{g}", ok, ""))
    ok = antipode(p.one(), tables) == p.one()
    results.append((f"{tables.name}.kappa-unit", ok, ""))
    return results
