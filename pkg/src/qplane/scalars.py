"""Exact arithmetic over the coefficient field Q(h, E) with E invertible.

h is the deformation parameter and E is an invertible symbol standing in
for exp(h).  The two are kept algebraically independent: every identity
the engine certifies is an identity of rational functions in h and E.
The analytic tie E = exp(h) enters only through :meth:`Scalar.to_series`,
which substitutes the exponential series for E; the series oracle is
built on that.

Polynomials are stored sparsely as ``{(h_exp, e_exp): Fraction}`` where
``h_exp >= 0`` and ``e_exp`` may be negative, so ``E * E^-1`` collapses
to 1 by exponent addition.  A :class:`Scalar` is a quotient of two such
polynomials kept in canonical form: numerator and denominator coprime,
denominator an honest polynomial (lowest E-exponent zero) with leading
coefficient 1 under a fixed degree-lexicographic order.  Equality is
then plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Scalar", "TruncatedSeries", "PoleAtOrigin", "ZERO", "ONE", "H", "E", "EINV"]


class PoleAtOrigin(ArithmeticError):
    """Series expansion requested for a scalar with a genuine pole at h = 0."""


# ---------------------------------------------------------------------------
# sparse polynomials in h, E, E^-1: dict {(h_exp, e_exp): Fraction}
# ---------------------------------------------------------------------------

_ZEROP: dict = {}
_ONEP = {(0, 0): Fraction(1)}


def _prune(d):
    return {m: c for m, c in d.items() if c}


def _padd(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _pneg(a):
    return {m: -c for m, c in a.items()}


def _pmul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            m = (i1 + i2, j1 + j2)
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _pscale(a, c):
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


def _pshift_e(a, k):
    if not k:
        return dict(a)
    return {(i, j + k): c for (i, j), c in a.items()}


def _min_e(a):
    return min(j for (_, j) in a)


def _deglex(m):
    return (m[0] + m[1], m[0])


def _lead(a):
    return max(a, key=_deglex)


# -- univariate helpers over Q[h]: dict {h_exp: Fraction} -------------------

def _udeg(u):
    return max(u) if u else -1


def _uadd(a, b):
    out = dict(a)
    for i, c in b.items():
        s = out.get(i, 0) + c
        if s:
            out[i] = s
        else:
            out.pop(i, None)
    return out


def _umul(a, b):
    out = {}
    for i, c in a.items():
        for j, d in b.items():
            s = out.get(i + j, 0) + c * d
            if s:
                out[i + j] = s
            else:
                out.pop(i + j, None)
    return out


def _uscale(a, c):
    return {i: v * c for i, v in a.items()} if c else {}


def _udivmod(a, b):
    """Division in Q[h]; b nonzero."""
    q = {}
    r = dict(a)
    db, lb = _udeg(b), b[_udeg(b)]
    while r and _udeg(r) >= db:
        dr = _udeg(r)
        c = r[dr] / lb
        q[dr - db] = q.get(dr - db, 0) + c
        for i, v in b.items():
            s = r.get(dr - db + i, 0) - c * v
            if s:
                r[dr - db + i] = s
            else:
                r.pop(dr - db + i, None)
    return q, r


def _ugcd(a, b):
    """Monic gcd in Q[h]."""
    while b:
        a, b = b, _udivmod(a, b)[1]
    if not a:
        return {}
    lc = a[_udeg(a)]
    return {i: c / lc for i, c in a.items()}


def _udiv_exact(a, b):
    q, r = _udivmod(a, b)
    assert not r, "inexact univariate division"
    return q


# -- bivariate gcd via content / primitive pseudo-remainder sequence --------

def _eview(p):
    """dict e_exp -> univariate h-polynomial; requires e_exps >= 0."""
    out = {}
    for (i, j), c in p.items():
        out.setdefault(j, {})[i] = c
    return out


def _eflat(ev):
    out = {}
    for j, u in ev.items():
        for i, c in u.items():
            out[(i, j)] = c
    return out


def _econtent(ev):
    cont = {}
    for u in ev.values():
        cont = _ugcd(cont, u)
        if _udeg(cont) == 0:
            break
    return cont


def _eprim(ev):
    cont = _econtent(ev)
    if _udeg(cont) == 0 and cont.get(0) == 1:
        return {j: dict(u) for j, u in ev.items()}
    return {j: _udiv_exact(u, cont) for j, u in ev.items()}


def _edeg(ev):
    return max(ev) if ev else -1


def _eprem(a, b):
    """Pseudo-remainder of a by b in (Q[h])[E]."""
    a = {j: dict(u) for j, u in a.items()}
    db = _edeg(b)
    lb = b[db]
    while a and _edeg(a) >= db:
        da = _edeg(a)
        la = a[da]
        new = {}
        for j, u in a.items():
            new[j] = _umul(u, lb)
        for j, u in b.items():
            t = _umul(u, la)
            jj = j + da - db
            new[jj] = _uadd(new.get(jj, {}), {i: -c for i, c in t.items()})
        a = {j: u for j, u in new.items() if u}
    return a


def _pgcd(a, b):
    """gcd of two nonzero honest polynomials (all e_exps >= 0)."""
    ea, eb = _eview(a), _eview(b)
    ca, cb = _econtent(ea), _econtent(eb)
    cg = _ugcd(ca, cb)
    pa, pb = _eprim(ea), _eprim(eb)
    if _edeg(pa) < _edeg(pb):
        pa, pb = pb, pa
    while True:
        if _edeg(pb) == 0:
            pg = {0: {0: Fraction(1)}}
            break
        r = _eprem(pa, pb)
        if not r:
            pg = pb
            break
        pa, pb = pb, _eprim(r)
    return _eflat({j: _umul(u, cg) for j, u in pg.items()})


def _pdiv_exact(a, g):
    """Exact division of honest polynomials."""
    if g == _ONEP:
        return dict(a)
    q = {}
    r = dict(a)
    mg = _lead(g)
    cg = g[mg]
    while r:
        mr = _lead(r)
        mq = (mr[0] - mg[0], mr[1] - mg[1])
        assert mq[0] >= 0 and mq[1] >= 0, "inexact polynomial division"
        c = r[mr] / cg
        q[mq] = c
        for m, v in g.items():
            mm = (m[0] + mq[0], m[1] + mq[1])
            s = r.get(mm, 0) - c * v
            if s:
                r[mm] = s
            else:
                r.pop(mm, None)
    return q


def _canonical(num, den):
    if not den:
        raise ZeroDivisionError("scalar with zero denominator")
    if not num:
        return {}, dict(_ONEP)
    k = _min_e(den)
    if k:
        num, den = _pshift_e(num, -k), _pshift_e(den, -k)
    if den != _ONEP:
        s = min(0, _min_e(num))
        a = _pshift_e(num, -s)
        g = _pgcd(a, den)
        if g != _ONEP and not (len(g) == 1 and g.get((0, 0)) == 1):
            a, den = _pdiv_exact(a, g), _pdiv_exact(den, g)
        num = _pshift_e(a, s)
        k2 = _min_e(den)
        if k2:
            num, den = _pshift_e(num, -k2), _pshift_e(den, -k2)
    lc = den[_lead(den)]
    if lc != 1:
        num, den = _pscale(num, 1 / lc), _pscale(den, 1 / lc)
    return num, den


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

class Scalar:
    """An element of Q(h, E), always held in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, Scalar):
            if den is not None:
                raise TypeError("cannot re-wrap a Scalar with a denominator")
            self.num, self.den = num.num, num.den
            return
        if isinstance(num, (int, Fraction)):
            num = {(0, 0): Fraction(num)} if num else {}
        if den is None:
            den = dict(_ONEP)
        elif isinstance(den, (int, Fraction)):
            den = {(0, 0): Fraction(den)} if den else {}
        self.num, self.den = _canonical(_prune(num), _prune(den))

    @classmethod
    def _raw(cls, num, den):
        s = object.__new__(cls)
        s.num, s.den = num, den
        return s

    @classmethod
    def monomial(cls, h_exp=0, e_exp=0, coeff=1):
        c = Fraction(coeff)
        return cls._raw({(h_exp, e_exp): c} if c else {}, dict(_ONEP)) if h_exp >= 0 \
            else cls({(h_exp, e_exp): c})

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _promote(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        return NotImplemented

    def __add__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _ONEP and other.den == _ONEP:
            return Scalar._raw(_padd(self.num, other.num), dict(_ONEP))
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return Scalar(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(_pneg(self.num), self.den)

    def __sub__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den == _ONEP and other.den == _ONEP:
            return Scalar._raw(_pmul(self.num, other.num), dict(_ONEP))
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inversion of the zero scalar")
        return Scalar(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar._promote(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == _ONEP and self.den == _ONEP

    # -- series substitution E -> exp(h) -------------------------------------

    def to_series(self, order):
        """Taylor-expand in h after substituting the exponential series for E.

        Cancels matching h-powers between numerator and denominator; a
        non-cancelling pole raises :class:`PoleAtOrigin`.
        """
        if order < 0:
            raise ValueError("negative series order")
        pad = 0
        while True:
            ds = _poly_series(self.den, order + pad)
            if any(ds):
                break
            pad += 8
            if pad > order + 128:  # unreachable for nonzero polynomials
                raise AssertionError("denominator series identically zero")
        v = next(i for i, c in enumerate(ds) if c)
        ns = _poly_series(self.num, order + v)
        ds = _poly_series(self.den, order + v)
        if any(ns[:v]):
            raise PoleAtOrigin(f"pole of order <= {v} at h = 0")
        ns, ds = ns[v:], ds[v:]
        out = [Fraction(0)] * (order + 1)
        for k in range(order + 1):
            acc = ns[k]
            for i in range(k):
                acc -= out[i] * ds[k - i]
            out[k] = acc / ds[0]
        return TruncatedSeries(order, out)

    # -- printing -------------------------------------------------------------

    def __str__(self):
        num = _fmt_poly(self.num)
        if self.den == _ONEP:
            return num
        if len(self.num) > 1:
            num = f"({num})"
        den = _fmt_poly(self.den)
        if not _is_plain_monomial(self.den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar({self})"


def _poly_series(p, order):
    """Series of a polynomial under E -> exp(h), as a coefficient list."""
    out = [Fraction(0)] * (order + 1)
    for (i, j), c in p.items():
        if i > order:
            continue
        term = Fraction(1)
        for k in range(order - i + 1):
            if k:
                term = term * j / k
            if term or k == 0:
                out[i + k] += c * term
            if j == 0:
                break
    return out


def _fmt_frac(c):
    return str(c)


def _fmt_monomial(m, c):
    i, j = m
    parts = []
    if i:
        parts.append("h" if i == 1 else f"h^{i}")
    if j:
        parts.append("E" if j == 1 else f"E^{j}")
    if not parts:
        return _fmt_frac(c)
    if c == 1:
        return "*".join(parts)
    if c == -1:
        return "-" + "*".join(parts)
    return _fmt_frac(c) + "*" + "*".join(parts)


def _fmt_poly(p):
    if not p:
        return "0"
    mons = sorted(p, key=_deglex)
    text = _fmt_monomial(mons[0], p[mons[0]])
    for m in mons[1:]:
        c = p[m]
        piece = _fmt_monomial(m, abs(c) if c < 0 else c)
        text += (" - " if c < 0 else " + ") + piece
    return text


def _is_plain_monomial(p):
    """True for h^k or E^k with coefficient 1 (safe unparenthesised divisor)."""
    if len(p) != 1:
        return False
    (m, c), = p.items()
    return c == 1 and (m[0] == 0 or m[1] == 0)


# ---------------------------------------------------------------------------
# TruncatedSeries
# ---------------------------------------------------------------------------

class TruncatedSeries:
    """A Taylor polynomial in h of fixed order; arithmetic drops higher terms."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        self.order = order
        cs = [Fraction(c) for c in coeffs]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs[: order + 1])

    def __add__(self, other):
        other = self._co(other)
        n = min(self.order, other.order)
        return TruncatedSeries(n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) + (-self)

    def __mul__(self, other):
        other = self._co(other)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                out[i + j] += a * b
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def _co(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, [Fraction(other)])
        raise TypeError(f"cannot combine TruncatedSeries with {type(other)!r}")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._co(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def is_zero(self):
        return not any(self.coeffs)

    def __str__(self):
        p = {(i, 0): c for i, c in enumerate(self.coeffs) if c}
        return f"{_fmt_poly(p)} + O(h^{self.order + 1})"

    __repr__ = __str__


ZERO = Scalar(0)
ONE = Scalar(1)
H = Scalar.monomial(h_exp=1)
E = Scalar.monomial(e_exp=1)
EINV = Scalar.monomial(e_exp=-1)
