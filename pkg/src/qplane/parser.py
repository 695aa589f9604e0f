"""Text syntax for scalars, algebra elements and tensor elements.

Grammar, loosest binding first::

    sum     = tensor (('+'|'-') tensor)*
    tensor  = term ('@' term)*          # '@' separates tensor slots
    term    = unary (('*'|'/') unary)*
    unary   = '-' unary | power
    power   = atom ('^' int)*
    atom    = INT | 'h' | 'E' | generator | '(' sum ')'

Scalars and generators mix freely inside a term; division requires a
scalar divisor.  ``fmt`` produces the canonical text and round-trips
through ``parse``.
"""

from __future__ import annotations

from .engine import AlgElement, ForeignSymbol
from .scalars import Scalar

__all__ = ["parse", "fmt", "ParseError"]


class ParseError(ValueError):
    def __init__(self, msg, span=None):
        super().__init__(msg)
        self.span = span


# -- lexer -------------------------------------------------------------------

_OPS = set("+-*/^@()")


def _lex(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _OPS:
            toks.append((c, c, (i, i + 1)))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", int(text[i:j]), (i, j)))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("NAME", text[i:j], (i, j)))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", (i, i + 1))
    toks.append(("END", None, (n, n)))
    return toks


# -- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, text, p):
        self.text = text
        self.p = p
        self.toks = _lex(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, found {t[1]!r}", t[2])
        return t

    # values are Scalar, AlgElement, or ("T", arity, terms-dict)

    def parse_sum(self):
        v = self.parse_tensor()
        while self.peek()[0] in "+-":
            op = self.next()[0]
            w = self.parse_tensor()
            v = self._add(v, w if op == "+" else self._neg(w), self.peek()[2])
        return v

    def parse_tensor(self):
        v = self.parse_term()
        slots = [v]
        while self.peek()[0] == "@":
            self.next()
            slots.append(self.parse_term())
        if len(slots) == 1:
            return v
        words = []
        coeff = Scalar(1)
        from .coalgebra import TensorElement
        parts = []
        for s in slots:
            if isinstance(s, Scalar):
                s = self.p.constant(s)
            if not isinstance(s, AlgElement):
                raise ParseError("tensor slots must be algebra elements")
            parts.append(s)
        out = TensorElement(self.p, len(parts), {})
        # distribute: tensor of sums = sum of tensors of single words
        import itertools
        terms = {}
        for combo in itertools.product(*(list(x.terms.items()) for x in parts)):
            ws = tuple(w for w, _ in combo)
            c = Scalar(1)
            for _, ci in combo:
                c = c * ci
            prev = terms.get(ws)
            terms[ws] = c if prev is None else prev + c
        return TensorElement(self.p, len(parts), terms)

    def parse_term(self):
        v = self.parse_unary()
        while self.peek()[0] in "*/":
            op, _, span = self.next()
            w = self.parse_unary()
            v = self._mul(v, w, span) if op == "*" else self._div(v, w, span)
        return v

    def parse_unary(self):
        if self.peek()[0] == "-":
            self.next()
            return self._neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        v = self.parse_atom()
        while self.peek()[0] == "^":
            self.next()
            neg = False
            if self.peek()[0] == "-":
                self.next()
                neg = True
            t = self.expect("INT")
            n = -t[1] if neg else t[1]
            v = self._pow(v, n, t[2])
        return v

    def parse_atom(self):
        kind, val, span = self.next()
        if kind == "INT":
            return Scalar(val)
        if kind == "NAME":
            if val == "h":
                return Scalar.monomial(h_exp=1)
            if val == "E":
                return Scalar.monomial(e_exp=1)
            if val in self.p.by_name:
                return self.p.gen(val)
            raise ForeignSymbol(
                f"unknown generator {val!r} in presentation {self.p.name}", span)
        if kind == "(":
            v = self.parse_sum()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token {val!r}", span)

    # -- value algebra ---------------------------------------------------------

    def _neg(self, v):
        return -v if not isinstance(v, tuple) else v  # tensors negate via class

    def _add(self, a, b, span):
        from .coalgebra import TensorElement
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a + b
        if isinstance(a, TensorElement) or isinstance(b, TensorElement):
            if not (isinstance(a, TensorElement) and isinstance(b, TensorElement)):
                raise ParseError("cannot add a tensor to a non-tensor", span)
            if a.arity != b.arity:
                raise ParseError("tensor arity mismatch", span)
            return a + b
        if isinstance(a, Scalar):
            a = self.p.constant(a)
        if isinstance(b, Scalar):
            b = self.p.constant(b)
        return a + b

    def _mul(self, a, b, span):
        from .coalgebra import TensorElement
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a * b
        if isinstance(a, TensorElement):
            if isinstance(b, Scalar):
                return a.scaled(b)
            raise ParseError("tensors multiply only by scalars here", span)
        if isinstance(b, TensorElement):
            if isinstance(a, Scalar):
                return b.scaled(a)
            raise ParseError("tensors multiply only by scalars here", span)
        if isinstance(a, Scalar):
            return b.scaled(a)
        if isinstance(b, Scalar):
            return a.scaled(b)
        return self.p.mul(a, b)

    def _div(self, a, b, span):
        if not isinstance(b, Scalar):
            raise ParseError("division requires a scalar divisor", span)
        if isinstance(a, Scalar):
            return a / b
        return a.scaled(b.inverse())

    def _pow(self, v, n, span):
        from .coalgebra import TensorElement
        if isinstance(v, Scalar):
            return v ** n
        if isinstance(v, TensorElement):
            raise ParseError("tensor powers are not supported", span)
        if n < 0:
            raise ParseError("negative power of an algebra element", span)
        out = self.p.one()
        for _ in range(n):
            out = self.p.mul(out, v)
        return out


def parse(text, p):
    """Parse ``text`` over presentation ``p`` into an AlgElement or TensorElement."""
    if not text or not text.strip():
        raise ParseError("empty input", (0, 0))
    pr = _Parser(text, p)
    v = pr.parse_sum()
    t = pr.peek()
    if t[0] != "END":
        raise ParseError(f"trailing input at {t[1]!r}", t[2])
    if isinstance(v, Scalar):
        v = p.constant(v)
    return v


# -- formatter ------------------------------------------------------------------

def _fmt_word(w):
    if not w:
        return "1"
    parts = []
    for g in w:
        if parts and parts[-1][0] == g:
            parts[-1][1] += 1
        else:
            parts.append([g, 1])
    return "*".join(g if k == 1 else f"{g}^{k}" for g, k in parts)


def _scalar_is_negative(c):
    return bool(c.num) and all(v < 0 for v in c.num.values())


def _fmt_coeff_word(c, word_text):
    """Render c * word, omitting unit coefficients."""
    if word_text == "1":
        s = str(c)
        # a bare multi-term polynomial must not bleed into the enclosing sum
        return f"({s})" if len(c.num) > 1 and "/" not in s else s
    if c.is_one():
        return word_text
    if (-c).is_one():
        return f"-{word_text}"
    s = str(c)
    if len(c.num) > 1 and "/" not in s:
        s = f"({s})"
    return f"{s}*{word_text}"


def _join_signed(pieces):
    """pieces: list of (is_negative, magnitude_text)."""
    if not pieces:
        return "0"
    neg, text = pieces[0]
    out = ("-" if neg and not text.startswith("-") else "") + text
    if neg and text.startswith("-"):
        out = text
    for neg, text in pieces[1:]:
        out += (" - " if neg else " + ") + text
    return out


def _signed_term(c, word_text):
    if _scalar_is_negative(c):
        return True, _fmt_coeff_word(-c, word_text)
    return False, _fmt_coeff_word(c, word_text)


def fmt(e):
    """Canonical deterministic text; parse(fmt(e)) == e."""
    from .coalgebra import TensorElement
    if isinstance(e, Scalar):
        return str(e)
    if isinstance(e, TensorElement):
        if not e.terms:
            return "0"
        keys = sorted(e.terms, key=lambda ws: tuple(e.p.key(w) for w in ws), reverse=True)
        pieces = []
        for ws in keys:
            body = " @ ".join(_fmt_word(w) for w in ws)
            c = e.terms[ws]
            if _scalar_is_negative(c):
                pieces.append((True, _tensor_piece(-c, ws)))
            else:
                pieces.append((False, _tensor_piece(c, ws)))
        return _join_signed(pieces)
    if not e.terms:
        return "0"
    keys = sorted(e.terms, key=e.p.key, reverse=True)
    return _join_signed([_signed_term(e.terms[w], _fmt_word(w)) for w in keys])


def _tensor_piece(c, ws):
    head = _fmt_coeff_word(c, _fmt_word(ws[0]))
    rest = " @ ".join(_fmt_word(w) for w in ws[1:])
    return f"{head} @ {rest}"
