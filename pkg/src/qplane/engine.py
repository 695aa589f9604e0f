"""Words over a graded alphabet, linear combinations, oriented rewriting.

A :class:`Presentation` is an alphabet of :class:`GeneratorSym` plus a set
of oriented :class:`RewriteRule`\\ s.  Words are tuples of generator names;
normal forms are the words containing no rule left-hand side as a subword.
Every rule must strictly decrease the degree-lexicographic order induced
by the generator ranks, which makes rewriting terminate; a step budget
turns any mis-oriented rule into a diagnosable :class:`NonTermination`
instead of a hang.

Coefficients are :class:`~qplane.scalars.Scalar` by default but any ring
with ``+``, ``*``, unary ``-`` and ``is_zero()`` works (the coefficient
solver rewrites with polynomials in its unknowns through the same code).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import Scalar

__all__ = [
    "GeneratorSym", "RewriteRule", "AlgElement", "Presentation",
    "ForeignSymbol", "NonTermination", "normalize", "multiply",
    "exterior_delta", "check_confluence", "OverlapFailure",
]


class ForeignSymbol(ValueError):
    """A generator name that does not belong to the presentation."""

    def __init__(self, msg, span=None):
        super().__init__(msg)
        self.span = span


class NonTermination(RuntimeError):
    """Rewriting exceeded its step budget (signals a mis-oriented rule)."""


@dataclass(frozen=True)
class GeneratorSym:
    name: str
    parity: int = 0
    rank: int = 0


def _coeff(c):
    if isinstance(c, Scalar):
        return c
    if isinstance(c, int) or type(c).__name__ == "Fraction":
        return Scalar(c)
    return c  # any ring element with is_zero()


def _is_zero(c):
    return c.is_zero()


class AlgElement:
    """A finite linear combination of words, bound to its presentation."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms):
        self.p = p
        out = {}
        for w, c in terms.items():
            c = _coeff(c)
            if not _is_zero(c):
                out[tuple(w)] = c
        self.terms = out

    def _check(self, other):
        if self.p is not other.p:
            raise ValueError("elements of different presentations")

    def __add__(self, other):
        if not isinstance(other, AlgElement):
            other = self.p.constant(other)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if _is_zero(s):
                out.pop(w, None)
            else:
                out[w] = s
        return AlgElement.__raw(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement.__raw(self.p, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgElement):
            other = self.p.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return self.p.mul(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, c):
        c = _coeff(c)
        if _is_zero(c):
            return AlgElement.__raw(self.p, {})
        out = {}
        for w, v in self.terms.items():
            s = c * v
            if not _is_zero(s):
                out[w] = s
        return AlgElement.__raw(self.p, out)

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            if other == 0:
                return not self.terms
            other = self.p.constant(other)
        return self.p is other.p and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def coefficient(self, word):
        return self.terms.get(tuple(word), Scalar(0))

    def normal(self):
        return self.p.normalize(self)

    def __iter__(self):
        return iter(self.terms.items())

    def __str__(self):
        from .parser import fmt  # late import: parser owns the canonical syntax
        return fmt(self)

    def __repr__(self):
        return f"<{self.p.name}: {self}>"

    @classmethod
    def __raw(cls, p, terms):
        e = object.__new__(cls)
        e.p, e.terms = p, terms
        return e

    _raw = __raw


class RewriteRule:
    """An oriented rule lhs -> rhs with provenance metadata.

    ``rhs`` is stored as a plain word->coefficient dict; every rhs word must
    be strictly smaller than the lhs in the presentation's deg-lex order.
    """

    __slots__ = ("lhs", "rhs", "provenance", "note")

    def __init__(self, lhs, rhs, provenance="PAPER", note=""):
        self.lhs = tuple(lhs)
        self.rhs = {tuple(w): _coeff(c) for w, c in rhs.items() if not _is_zero(_coeff(c))}
        self.provenance = provenance
        self.note = note

    def __repr__(self):
        return f"RewriteRule({'*'.join(self.lhs) or '1'} -> ..., {self.provenance})"


class Presentation:
    """A named alphabet with grading, ranks and oriented rewrite rules."""

    def __init__(self, name, gens, rules=(), max_check_degree=4,
                 step_budget=10 ** 6, validate=True):
        self.name = name
        self.gens = tuple(gens)
        self.rules = tuple(rules)
        self.max_check_degree = max_check_degree
        self.step_budget = step_budget
        self.by_name = {g.name: g for g in self.gens}
        self._rank = {g.name: g.rank for g in self.gens}
        self._parity = {g.name: g.parity for g in self.gens}
        self._index = {}
        for r in self.rules:
            self._index.setdefault(r.lhs[0], []).append(r)
        if validate:
            self._validate()

    # -- construction helpers -------------------------------------------------

    def extended(self, more_rules, name=None):
        return Presentation(name or self.name, self.gens,
                            tuple(self.rules) + tuple(more_rules),
                            self.max_check_degree, self.step_budget)

    def el(self, terms):
        for w in terms:
            for g in w:
                if g not in self.by_name:
                    raise ForeignSymbol(f"unknown generator {g!r} in {self.name}")
        return AlgElement(self, terms)

    def constant(self, c):
        return AlgElement(self, {(): _coeff(c)})

    def one(self):
        return self.constant(1)

    def zero(self):
        return AlgElement(self, {})

    def gen(self, name):
        if name not in self.by_name:
            raise ForeignSymbol(f"unknown generator {name!r} in {self.name}")
        return AlgElement(self, {(name,): Scalar(1)})

    # -- structure -------------------------------------------------------------

    def parity(self, word):
        s = 0
        for g in word:
            s ^= self._parity[g]
        return s

    def key(self, word):
        return (len(word), tuple(self._rank[g] for g in word))

    def _validate(self):
        names = [g.name for g in self.gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {self.name}")
        ranks = [g.rank for g in self.gens]
        if len(set(ranks)) != len(ranks):
            raise ValueError(f"generator ranks must be a total order in {self.name}")
        for r in self.rules:
            if not r.lhs:
                raise ValueError("empty rule lhs")
            for g in r.lhs:
                if g not in self.by_name:
                    raise ForeignSymbol(f"rule lhs uses foreign symbol {g!r}")
            lp = self.parity(r.lhs)
            lk = self.key(r.lhs)
            for w in r.rhs:
                for g in w:
                    if g not in self.by_name:
                        raise ForeignSymbol(f"rule rhs uses foreign symbol {g!r}")
                if self.parity(w) != lp:
                    raise ValueError(f"rule {r!r} is not parity-homogeneous")
                if not self.key(w) < lk:
                    raise ValueError(f"rule {r!r} does not decrease the term order")

    # -- rewriting ---------------------------------------------------------------

    def _find_redex(self, word, rightmost=False):
        idx = self._index
        rng = range(len(word) - 1, -1, -1) if rightmost else range(len(word))
        for i in rng:
            cands = idx.get(word[i])
            if not cands:
                continue
            for r in cands:
                if word[i:i + len(r.lhs)] == r.lhs:
                    return i, r
        return None

    def normalize(self, e, budget=None, rightmost=False):
        """Rewrite until no rule lhs occurs as a subword; collects like terms."""
        terms = e.terms if isinstance(e, AlgElement) else {
            tuple(w): _coeff(c) for w, c in e.items()}
        for w in terms:
            for g in w:
                if g not in self.by_name:
                    raise ForeignSymbol(f"unknown generator {g!r} in {self.name}")
        budget = self.step_budget if budget is None else budget
        out = {}
        stack = [(w, c) for w, c in terms.items() if not _is_zero(c)]
        steps = 0
        while stack:
            w, c = stack.pop()
            hit = self._find_redex(w, rightmost)
            if hit is None:
                s = out.get(w)
                s = c if s is None else s + c
                if _is_zero(s):
                    out.pop(w, None)
                else:
                    out[w] = s
                continue
            steps += 1
            if steps > budget:
                raise NonTermination(
                    f"step budget {budget} exceeded in {self.name} on {'*'.join(w)}")
            i, r = hit
            pre, post = w[:i], w[i + len(r.lhs):]
            for w2, c2 in r.rhs.items():
                cc = c * c2
                if not _is_zero(cc):
                    stack.append((pre + w2 + post, cc))
        return AlgElement._raw(self, out)

    def mul(self, a, b, budget=None):
        if not isinstance(a, AlgElement):
            a = self.constant(a)
        if not isinstance(b, AlgElement):
            b = self.constant(b)
        raw = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                c = c1 * c2
                if _is_zero(c):
                    continue
                w = w1 + w2
                s = raw.get(w)
                s = c if s is None else s + c
                if _is_zero(s):
                    raw.pop(w, None)
                else:
                    raw[w] = s
        return self.normalize(AlgElement._raw(self, raw), budget)

    # -- sampling -----------------------------------------------------------------

    def random_element(self, rng, max_len=3, alphabet=None, n_terms=3, coeffs=None):
        """Seeded pseudorandom normalized element of degree <= max_len."""
        alphabet = tuple(alphabet or (g.name for g in self.gens))
        pool = coeffs or [Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(3),
                          Scalar.monomial(h_exp=1), Scalar.monomial(e_exp=1)]
        terms = {}
        for _ in range(rng.randint(1, n_terms)):
            k = rng.randint(0, max_len)
            w = tuple(rng.choice(alphabet) for _ in range(k))
            c = rng.choice(pool)
            terms[w] = terms.get(w, Scalar(0)) + c
        return self.normalize(AlgElement(self, terms))

    def __repr__(self):
        return f"Presentation({self.name}, {len(self.gens)} gens, {len(self.rules)} rules)"


# -- free functions matching the operation surface ------------------------------

def normalize(e, p, budget=None):
    return p.normalize(e, budget)


def multiply(a, b, p, budget=None):
    return p.mul(a, b)


def exterior_delta(e, images, budget=None):
    """Graded Leibniz extension of a differential defined on generators.

    ``images`` maps generator names to AlgElements (zero for differentials
    themselves); odd letters to the left of the spot being differentiated
    contribute a Koszul sign.
    """
    p = e.p
    out = p.zero()
    for w, c in e.terms.items():
        sign = 1
        for i, g in enumerate(w):
            img = images.get(g)
            if img is None:
                raise ForeignSymbol(f"no differential image for generator {g!r}")
            if not img.is_zero():
                left = AlgElement(p, {w[:i]: Scalar(sign) * c})
                right = AlgElement(p, {w[i + 1:]: Scalar(1)})
                out = out + p.mul(p.mul(left, img), right)
            if p._parity[g]:
                sign = -sign
    return p.normalize(out, budget)


# -- local confluence ------------------------------------------------------------

@dataclass
class OverlapFailure:
    word: tuple
    left: "AlgElement"
    right: "AlgElement"

    def describe(self):
        from .parser import fmt
        return (f"word {'*'.join(self.word)}: {fmt(self.left)}  vs  {fmt(self.right)}")


def _one_step(p, word, pos, rule):
    pre, post = word[:pos], word[pos + len(rule.lhs):]
    return AlgElement(p, {pre + w + post: c for w, c in rule.rhs.items()})


def check_confluence(p, max_degree=None, exhaustive=True):
    """Bounded-degree local-confluence check (diamond-lemma style).

    Resolves every overlap and inclusion ambiguity between rule lhs's whose
    ambiguity word has degree <= max_degree, both ways, and compares normal
    forms.  With ``exhaustive`` also cross-checks leftmost vs rightmost
    reduction on every word up to the bound.  Returns the list of
    failures; empty means locally confluent up to the bound.
    """
    max_degree = max_degree or p.max_check_degree
    failures = []
    seen = set()

    def probe(word, i, r, j, s):
        key = (word, i, id(r), j, id(s))
        if key in seen:
            return
        seen.add(key)
        nf1 = p.normalize(_one_step(p, word, i, r))
        nf2 = p.normalize(_one_step(p, word, j, s))
        if nf1 != nf2:
            failures.append(OverlapFailure(word, nf1, nf2))

    for r, s in itertools.product(p.rules, p.rules):
        lr, ls = r.lhs, s.lhs
        # proper overlaps: a suffix of lr equals a prefix of ls
        for k in range(1, min(len(lr), len(ls))):
            if lr[-k:] == ls[:k]:
                word = lr + ls[k:]
                if len(word) <= max_degree:
                    probe(word, 0, r, len(lr) - k, s)
        # inclusions: ls occurs inside lr (distinct rules or offset)
        if len(ls) <= len(lr):
            for i in range(len(lr) - len(ls) + 1):
                if lr[i:i + len(ls)] == ls and not (r is s and i == 0):
                    if len(lr) <= max_degree:
                        probe(lr, 0, r, i, s)

    if exhaustive:
        names = [g.name for g in p.gens]
        for n in range(2, max_degree + 1):
            for word in itertools.product(names, repeat=n):
                e = AlgElement(p, {word: Scalar(1)})
                if p.normalize(e) != p.normalize(e, rightmost=True):
                    failures.append(OverlapFailure(
                        word, p.normalize(e), p.normalize(e, rightmost=True)))
    return failures
